#include <doctest.h>

#include <fstream>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "qlab/braid.hpp"
#include "qlab/coloring.hpp"
#include "qlab/constructions.hpp"
#include "qlab/errors.hpp"

using namespace qlab;

TEST_CASE("braid parsing") {
    BraidWord w = parse_braid("[1,-2,1,-2]");
    CHECK(w.strands == 3);
    CHECK(w.letters == std::vector<int>({1, -2, 1, -2}));
    CHECK(parse_braid(" [ 1 , 1 , 1 ] ").strands == 2);
    CHECK(parse_braid("[]", 1).letters.empty());
    CHECK(parse_braid("[3]", 5).strands == 5);

    CHECK_THROWS_AS(parse_braid("1,2"), ParseError);
    CHECK_THROWS_AS(parse_braid("[1,,2]"), ParseError);
    CHECK_THROWS_AS(parse_braid("[1 2]"), ParseError);
    CHECK_THROWS_AS(parse_braid("[1,0]"), ZeroLetter);
    CHECK_THROWS_AS(parse_braid("[3]", 3), LetterOutOfRange);
    CHECK_THROWS_AS(parse_braid("[1]", 0), ParseError);
}

TEST_CASE("closure permutation and knot test") {
    CHECK(is_knot(parse_braid("[1,1,1]")));
    CHECK(is_knot(parse_braid("[1,-2,1,-2]")));
    CHECK(is_knot(unknot()));
    CHECK(!is_knot(parse_braid("[1,1]")));        // Hopf link
    CHECK(!is_knot(parse_braid("[1]", 3)));       // split component
    CHECK(closure_permutation(parse_braid("[1]")) == Perm({1, 0}));
    CHECK(closure_permutation(parse_braid("[1,2]")) == Perm({2, 0, 1}));
}

TEST_CASE("braid word symmetries") {
    BraidWord w = parse_braid("[1,-2,1,-2]");
    CHECK(mirror(w).letters == std::vector<int>({-1, 2, -1, 2}));
    CHECK(reverse(w).letters == std::vector<int>({-2, 1, -2, 1}));
    CHECK(reverse_mirror(w).letters == std::vector<int>({2, -1, 2, -1}));
    CHECK(mirror(mirror(w)).letters == w.letters);
    CHECK(reverse_mirror(reverse_mirror(w)).letters == w.letters);
}

TEST_CASE("connected sum shifts the second factor") {
    BraidWord g = connect_sum(parse_braid("[1,1,1]"), parse_braid("[1,1,1]"));
    CHECK(g.strands == 3);
    CHECK(g.letters == std::vector<int>({1, 1, 1, 2, 2, 2}));
    BraidWord s = connect_sum(parse_braid("[1,1,1]"), mirror(parse_braid("[1,1,1]")));
    CHECK(s.letters == std::vector<int>({1, 1, 1, -2, -2, -2}));
    CHECK(is_knot(g));
    CHECK(is_knot(s));
    CHECK_THROWS_AS(connect_sum(parse_braid("[1,1]"), parse_braid("[1,1,1]")), NotAKnot);
}

TEST_CASE("torus braids") {
    BraidWord t34 = torus_braid(3, 4);
    CHECK(t34.strands == 3);
    CHECK(t34.letters == std::vector<int>({1, 2, 1, 2, 1, 2, 1, 2}));
    CHECK(is_knot(t34));
    CHECK(torus_braid(2, 3).letters == std::vector<int>({1, 1, 1}));
    CHECK_THROWS_AS(torus_braid(2, 4), NotCoprime);
    CHECK_THROWS_AS(torus_braid(0, 3), InvalidParameter);
}

TEST_CASE("catalog file round trip") {
    auto entries = load_catalog(fixtures::data_path("catalog/torus.knt"));
    REQUIRE(entries.size() == 8);
    CHECK(entries[0].name == "3_1");
    CHECK(entries[0].braid.strands == 2);
    CHECK(entries[0].note == "trefoil, torus (2,3)");
    CHECK(entries[4].name == "8_19");
    CHECK(entries[4].braid.letters == torus_braid(3, 4).letters);
    CHECK(entries[7].name == "square");

    std::string bad = "/tmp/qlab_bad_catalog.knt";
    {
        std::ofstream f(bad);
        f << "ok 2 [1,1,1]\nhopf 2 [1,1]\n";
    }
    CHECK_THROWS_AS(load_catalog(bad), NotAKnot);
    {
        std::ofstream f(bad);
        f << "broken x [1]\n";
    }
    CHECK_THROWS_AS(load_catalog(bad), ParseError);
}

TEST_CASE("coloring counts against the oracle") {
    Quandle r3 = dihedral_quandle(3);
    Quandle r5 = dihedral_quandle(5);
    BraidWord tre = parse_braid("[1,1,1]");
    BraidWord fig8 = parse_braid("[1,-2,1,-2]");

    CHECK(count_colorings(r3, tre) == 9);
    CHECK(count_colorings(r3, fig8) == 3);
    CHECK(count_colorings(r5, fig8) == 25);
    CHECK(count_colorings(fixtures::x6(), tre) == 30);

    for (const Quandle& X : {r3, r5, fixtures::x6(), fixtures::t6()})
        for (const BraidWord& w : {tre, fig8, parse_braid("[1,1,1,2,2,2]")}) {
            CHECK(count_colorings(X, w) == oracle::count_colorings(X, w));
            CHECK(count_colorings_fixed(X, 0, w) == oracle::count_colorings_fixed(X, 0, w));
        }
}

TEST_CASE("unknot and trivial words color trivially") {
    Quandle x6 = fixtures::x6();
    CHECK(count_colorings(x6, unknot()) == 6);
    CHECK(count_colorings(x6, parse_braid("[1]", 2)) == 6);
}

TEST_CASE("counting matches the homogeneous shortcut") {
    // connected quandle: total = |X| * fixed count, for every basepoint color
    Quandle e24 = fixtures::e24();
    BraidWord g = parse_braid("[1,1,1,2,2,2]");
    long long fixed0 = count_colorings_fixed(e24, 0, g);
    for (int x : {1, 7, 23}) CHECK(count_colorings_fixed(e24, x, g) == fixed0);
    CHECK(count_colorings(e24, g) == 24 * fixed0);
}

TEST_CASE("coloring budget refuses huge enumerations upfront") {
    Quandle t = trivial_quandle(40);  // not connected, no shortcut
    BraidWord wide = parse_braid("[1,2,3,4,5,6,7]");  // unknot on 8 strands
    CHECK_THROWS_AS(count_colorings(t, wide), SizeLimit);
}

TEST_CASE("end monochromatic tangles") {
    Quandle x6 = fixtures::x6();
    CHECK(is_end_monochromatic(x6, parse_braid("[1,1,1]")));
    CHECK(is_end_monochromatic(x6, torus_braid(3, 4)));
    Quandle e8 = fixtures::e8();
    CHECK(is_end_monochromatic(e8, parse_braid("[1,1,1,1,1]")));
    CHECK(is_end_monochromatic(e8, parse_braid("[1,1,1,1,1,1,1]")));
    CHECK(!is_end_monochromatic(e8, parse_braid("[1,1,1]")));
    CHECK(!is_end_monochromatic(e8, parse_braid("[1,1,1,1,1,1,1,1,1]")));
}

TEST_CASE("enumerate colorings lists every witness in order") {
    Quandle r3 = dihedral_quandle(3);
    auto cols = enumerate_colorings(r3, parse_braid("[1,1,1]"));
    CHECK(cols.size() == 9);
    for (size_t i = 1; i < cols.size(); ++i) CHECK(cols[i - 1].top < cols[i].top);
    for (const Coloring& c : cols) {
        CHECK(c.trace.size() == 3);
        for (const Crossing& cr : c.trace) CHECK(cr.sign == 1);
    }
}
