#include <doctest.h>

#include <cstdint>
#include <set>
#include <vector>

#include "ego/enumerate.hpp"
#include "ego/formula.hpp"
#include "ego/signature.hpp"

using namespace ego;

namespace {

// Independent count of formulas per size by grammar combinatorics:
//   c[1] = #props (+2 when constants enabled)
//   c[s] = #unary * c[s-1] + [or] * sum_{i+j=s-1} c[i]*c[j]
std::vector<std::uint64_t> counts_by_size(const Signature& sig, int max_size) {
    const std::uint64_t atoms =
        sig.props.size() + (sig.allow_consts ? 2 : 0);
    const std::uint64_t unary = (sig.allow_not ? 1 : 0) + sig.at_names.size() +
                                sig.dere_names.size() +
                                sig.dedicto_names.size();
    std::vector<std::uint64_t> c(static_cast<std::size_t>(max_size) + 1, 0);
    if (max_size >= 1)
        c[1] = atoms;
    for (int s = 2; s <= max_size; ++s) {
        std::uint64_t n = unary * c[static_cast<std::size_t>(s - 1)];
        if (sig.allow_or)
            for (int i = 1; i <= s - 2; ++i)
                n += c[static_cast<std::size_t>(i)] *
                     c[static_cast<std::size_t>(s - 1 - i)];
        c[static_cast<std::size_t>(s)] = n;
    }
    return c;
}

} // namespace

TEST_CASE("enumeration examples") {
    Signature just_p;
    just_p.props = {Prop{"p"}};
    auto fs = enumerate_formulas(just_p, 1);
    REQUIRE(fs.size() == 1);
    CHECK(fs[0] == Formula::P("p"));

    Signature with_not = just_p;
    with_not.allow_not = true;
    fs = enumerate_formulas(with_not, 2);
    REQUIRE(fs.size() == 2);
    CHECK(fs[0] == Formula::P("p"));
    CHECK(fs[1] == Formula::Not(Formula::P("p")));
}

TEST_CASE("enumeration order: size first, then canonical rendering") {
    Signature sig;
    sig.props = {Prop{"p"}};
    sig.allow_not = true;
    sig.dere_names = {Name{"Ann"}};

    const auto fs = enumerate_formulas(sig, 3);
    std::vector<std::string> got;
    for (const Formula& f : fs)
        got.push_back(f.str());
    const std::vector<std::string> expected = {
        "p",
        "!p",         "R[Ann] p",
        "!!p",        "!R[Ann] p", "R[Ann] !p", "R[Ann] R[Ann] p",
    };
    CHECK(got == expected);
}

TEST_CASE("enumeration is complete and duplicate-free") {
    Signature sig;
    sig.props = {Prop{"p"}};
    sig.allow_not = true;
    sig.allow_or = true;
    sig.at_names = {Name{"Ann"}};
    sig.dere_names = {Name{"Ann"}};
    sig.dedicto_names = {Name{"Ann"}};

    const int k = 4;
    const auto fs = enumerate_formulas(sig, k);

    // Exactly once: canonical renderings are pairwise distinct.
    std::set<std::string> seen;
    int last_size = 0;
    for (const Formula& f : fs) {
        CHECK(f.size() <= k);
        CHECK(f.size() >= last_size); // nondecreasing size
        last_size = f.size();
        CHECK(seen.insert(f.str()).second);
    }

    // Count agrees with the grammar combinatorics oracle.
    const auto counts = counts_by_size(sig, k);
    std::uint64_t expected_total = 0;
    for (int s = 1; s <= k; ++s)
        expected_total += counts[static_cast<std::size_t>(s)];
    CHECK(fs.size() == expected_total);

    // Completeness: a handful of hand-built size<=4 formulas all appear.
    const Formula p = Formula::P("p");
    for (const Formula& f : {
             Formula::Or(p, Formula::Not(p)),
             Formula::DeDicto(Name{"Ann"}, Formula::At(Name{"Ann"}, p)),
             Formula::Not(Formula::Not(Formula::Not(p))),
             Formula::Or(Formula::Or(p, p), p),
             Formula::Or(p, Formula::Or(p, p)),
         })
        CHECK(seen.count(f.str()) == 1);
}

TEST_CASE("empty signature yields an empty stream") {
    CHECK(enumerate_formulas(Signature{}, 3).empty());
}

TEST_CASE("constants count as atoms when enabled") {
    Signature sig;
    sig.allow_consts = true;
    sig.allow_not = true;
    const auto fs = enumerate_formulas(sig, 2);
    // false, true, then !false, !true.
    REQUIRE(fs.size() == 4);
    CHECK(fs[0] == Formula::False());
    CHECK(fs[1] == Formula::True());
    CHECK(fs[2] == Formula::Not(Formula::False()));
    CHECK(fs[3] == Formula::Not(Formula::True()));
}
