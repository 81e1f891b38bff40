#include "ego/truth_set.hpp"

#include <bit>

#include "ego/error.hpp"

namespace ego {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t n_bits) {
    return (n_bits + kWordBits - 1) / kWordBits;
}
} // namespace

TruthSet::TruthSet(std::size_t n_bits, bool fill)
    : n_bits_(n_bits), words_(word_count(n_bits), fill ? ~std::uint64_t{0} : 0) {
    clear_padding();
}

void TruthSet::clear_padding() {
    const std::size_t rem = n_bits_ % kWordBits;
    if (rem != 0 && !words_.empty())
        words_.back() &= (std::uint64_t{1} << rem) - 1;
}

bool TruthSet::test(std::size_t i) const {
    if (i >= n_bits_)
        throw Error("TruthSet: bit index out of range");
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1;
}

void TruthSet::set(std::size_t i, bool value) {
    if (i >= n_bits_)
        throw Error("TruthSet: bit index out of range");
    const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
    if (value)
        words_[i / kWordBits] |= mask;
    else
        words_[i / kWordBits] &= ~mask;
}

std::size_t TruthSet::count() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

TruthSet TruthSet::complement() const {
    TruthSet out(n_bits_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        out.words_[i] = ~words_[i];
    out.clear_padding();
    return out;
}

TruthSet TruthSet::union_with(const TruthSet& other) const {
    if (n_bits_ != other.n_bits_)
        throw Error("TruthSet: size mismatch (sets belong to different models?)");
    TruthSet out(n_bits_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        out.words_[i] = words_[i] | other.words_[i];
    return out;
}

TruthSet TruthSet::intersect(const TruthSet& other) const {
    if (n_bits_ != other.n_bits_)
        throw Error("TruthSet: size mismatch (sets belong to different models?)");
    TruthSet out(n_bits_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        out.words_[i] = words_[i] & other.words_[i];
    return out;
}

bool TruthSet::subset_of(const TruthSet& other) const {
    if (n_bits_ != other.n_bits_)
        throw Error("TruthSet: size mismatch (sets belong to different models?)");
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i])
            return false;
    return true;
}

std::string TruthSet::to_bit_string() const {
    std::string s(n_bits_, '0');
    for (std::size_t i = 0; i < n_bits_; ++i)
        if (test(i))
            s[i] = '1';
    return s;
}

TruthSet TruthSet::from_bit_string(const std::string& bits) {
    TruthSet out(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            out.set(i);
        else if (bits[i] != '0')
            throw Error("TruthSet: bit string must contain only '0'/'1'");
    }
    return out;
}

std::size_t TruthSet::Hash::operator()(const TruthSet& t) const {
    // FNV-1a over the words plus the length.
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(t.n_bits_);
    for (std::uint64_t w : t.words_)
        mix(w);
    return static_cast<std::size_t>(h);
}

} // namespace ego
