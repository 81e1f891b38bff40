#ifndef EGO_TRUTH_SET_HPP
#define EGO_TRUTH_SET_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ego {

// A subset of the world/agent grid of one model, stored as a bit vector in
// row-major order: bit index = world_index * n_agents + agent_index.
// Truth sets are only comparable within the model they were computed on;
// functions taking a model check the length against the model's grid.
class TruthSet {
public:
    TruthSet() = default;
    explicit TruthSet(std::size_t n_bits, bool fill = false);

    static TruthSet none(std::size_t n_bits) { return TruthSet(n_bits, false); }
    static TruthSet all(std::size_t n_bits) { return TruthSet(n_bits, true); }

    std::size_t size() const { return n_bits_; }
    bool test(std::size_t i) const;
    void set(std::size_t i, bool value = true);

    std::size_t count() const;
    bool empty_set() const { return count() == 0; }

    TruthSet complement() const;
    TruthSet union_with(const TruthSet& other) const;
    TruthSet intersect(const TruthSet& other) const;
    bool subset_of(const TruthSet& other) const;

    bool operator==(const TruthSet& other) const {
        return n_bits_ == other.n_bits_ && words_ == other.words_;
    }
    bool operator!=(const TruthSet& other) const { return !(*this == other); }

    // "0110..." in bit-index order; used by the certificate file format.
    std::string to_bit_string() const;
    static TruthSet from_bit_string(const std::string& bits);

    struct Hash {
        std::size_t operator()(const TruthSet& t) const;
    };

private:
    void clear_padding();

    std::size_t n_bits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace ego

#endif
