#include "doctest.h"

#include <random>

#include "bc/corpus.hpp"
#include "bc/lattice.hpp"
#include "bc/oracles/oracles.hpp"

using namespace bc;

namespace {
Crosscut with_order(const std::vector<int>& elems, FinitePoset order) { return {elems, std::move(order)}; }
}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("lattice validation") {
    // Two maxima.
    CHECK_THROWS(FiniteLattice({"0", "a", "b"}, {{0, 1}, {0, 2}}));
    // Bowtie: a, b below both c and d, no unique join.
    CHECK_THROWS(FiniteLattice({"0", "a", "b", "c", "d", "1"},
                               {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}}));
}

TEST_CASE("elements are reordered into a linear extension") {
    FiniteLattice l({"top", "bot", "a"}, {{1, 2}, {2, 0}});
    CHECK(l.label(l.bottom()) == "bot");
    CHECK(l.label(l.top()) == "top");
}

TEST_CASE("mobius_recursive") {
    CHECK(mobius_of_lattice(boolean_lattice(3)) == -1);
    CHECK(mobius_of_lattice(divisor_lattice(12)) == 0);
    CHECK(mobius_of_lattice(partition_lattice(3)) == 2);
    CHECK(mobius_of_lattice(partition_lattice(4)) == -6);
}

TEST_CASE("generators") {
    CHECK(boolean_lattice(3).size() == 8);
    CHECK(partition_lattice(3).size() == 5);
    CHECK(partition_lattice(4).size() == 15);
    FiniteLattice d30 = divisor_lattice(30);
    CHECK(d30.size() == 8);
    CHECK(d30.atoms().size() == 3);
    CHECK(mobius_of_lattice(d30) == -1);
    CHECK_THROWS_AS(partition_lattice(6), CapExceeded);
}

TEST_CASE("is_crosscut") {
    FiniteLattice b3 = boolean_lattice(3);
    CHECK(is_crosscut(b3, b3.atoms()));
    CHECK_FALSE(is_crosscut(b3, {b3.atoms()[0]}));
    CHECK(is_crosscut(b3, b3.coatoms()));
    CHECK_THROWS(is_crosscut(boolean_lattice(1), {}));
}

TEST_CASE("rota_crosscut") {
    FiniteLattice b2 = boolean_lattice(2);
    CHECK(rota_crosscut(b2, b2.atoms()) == 1);
    FiniteLattice pi3 = partition_lattice(3);
    CHECK(rota_crosscut(pi3, pi3.atoms()) == 2);
    FiniteLattice b3 = boolean_lattice(3);
    CHECK(rota_crosscut(b3, b3.coatoms()) == -1);
}

TEST_CASE("rota_crosscut on every crosscut of the corpus") {
    for (const auto& inst : corpus::lattices()) {
        if (inst.lattice.size() > 20) continue;
        BigInt mu = oracle::mobius(inst.lattice).value;
        CHECK(mobius_of_lattice(inst.lattice) == mu);
        for (const auto& c : enumerate_crosscuts(inst.lattice)) CHECK(rota_crosscut(inst.lattice, c) == mu);
    }
}

TEST_CASE("blass_sagan_B") {
    FiniteLattice b3 = boolean_lattice(3);
    auto atoms = b3.atoms();
    auto none = blass_sagan_B(b3, with_order(atoms, FinitePoset::antichain(3)));
    CHECK(none.broken.empty());

    // In B3 the join of two atoms is a coatom, so a < b ∨ c fails and {b, c} is not broken.
    auto lin = blass_sagan_B(b3, with_order(atoms, FinitePoset::chain(3)));
    CHECK(std::find(lin.broken.begin(), lin.broken.end(), Mask{0b110}) == lin.broken.end());
    // In Π3 any two atoms join to 1̂, and the ◁-least atom witnesses the other two.
    FiniteLattice pi3 = partition_lattice(3);
    auto pl = blass_sagan_B(pi3, with_order(pi3.atoms(), FinitePoset::chain(3)));
    CHECK(std::find(pl.broken.begin(), pl.broken.end(), Mask{0b110}) != pl.broken.end());
    CHECK(blass_sagan_mu(pi3, with_order(pi3.atoms(), FinitePoset::chain(3))).restricted == 2);
    for (Mask b : lin.broken) CHECK(popcount(b) >= 2);
    for (std::size_t i = 0; i < lin.broken.size(); ++i) CHECK_FALSE(contains(lin.broken[i], lin.witness[i]));
    CHECK(blass_sagan_dual_form_consistent(lin, 3));
}

TEST_CASE("blass_sagan_mu") {
    FiniteLattice b3 = boolean_lattice(3);
    Crosscut lin = with_order(b3.atoms(), FinitePoset::chain(3));
    auto r = blass_sagan_mu(b3, lin);
    CHECK(r.restricted == -1);
    CHECK(r.mu == -1);
    std::vector<Mask> none;
    CHECK(blass_sagan_mu(b3, lin, &none).restricted == rota_crosscut(b3, lin.elements));

    FiniteLattice pi4 = partition_lattice(4);
    Crosscut pl = with_order(pi4.atoms(), FinitePoset::chain(static_cast<int>(pi4.atoms().size())));
    auto p = blass_sagan_mu(pi4, pl);
    CHECK(p.restricted == -6);
    CHECK(p.crosscut == -6);

    std::vector<Mask> bogus{0b001};
    CHECK_THROWS_AS(blass_sagan_mu(b3, lin, &bogus), PreconditionViolation);
}

TEST_CASE("Blass-Sagan on arbitrary crosscuts, orders and sub-families") {
    std::mt19937_64 rng(13);
    for (const auto& inst : corpus::lattices()) {
        const auto& l = inst.lattice;
        BigInt mu = oracle::mobius(l).value;
        auto crosscuts = enumerate_crosscuts(l, 200);
        for (const auto& c : crosscuts) {
            if (c.size() > 12) continue;
            for (int t = 0; t < 3; ++t) {
                Crosscut cc{c, corpus::random_order(static_cast<int>(c.size()), rng)};
                auto fam = blass_sagan_B(l, cc);
                CHECK(blass_sagan_dual_form_consistent(fam, static_cast<int>(c.size())));
                std::vector<Mask> sub;
                for (Mask b : fam.broken)
                    if (rng() % 2) sub.push_back(b);
                CHECK(blass_sagan_mu(l, cc).restricted == mu);
                CHECK(blass_sagan_mu(l, cc, &sub).restricted == mu);
            }
        }
    }
}

TEST_CASE("atoms mode footnote") {
    std::mt19937_64 rng(2);
    for (const auto& inst : corpus::lattices()) {
        const auto& l = inst.lattice;
        auto atoms = l.atoms();
        for (int t = 0; t < 5; ++t) {
            Crosscut cc{atoms, corpus::random_order(static_cast<int>(atoms.size()), rng)};
            auto kept = blass_sagan_mu(l, cc, nullptr, false);
            auto dropped = blass_sagan_mu(l, cc, nullptr, true);
            CHECK(dropped.restricted == kept.restricted);
            CHECK(dropped.crosscut == kept.crosscut);
        }
    }
    FiniteLattice b3 = boolean_lattice(3);
    CHECK_THROWS(blass_sagan_B(b3, with_order(b3.coatoms(), FinitePoset::chain(3)), true));
}

TEST_CASE("serial and parallel agree") {
    FiniteLattice pi4 = partition_lattice(4);
    for (const auto& c : enumerate_crosscuts(pi4, 20)) {
        Crosscut cc{c, FinitePoset::chain(static_cast<int>(c.size()))};
        CHECK(rota_crosscut(pi4, c, Exec::serial) == rota_crosscut(pi4, c, Exec::parallel));
        CHECK(blass_sagan_mu(pi4, cc, nullptr, false, Exec::serial).restricted ==
              blass_sagan_mu(pi4, cc, nullptr, false, Exec::parallel).restricted);
    }
}

}
