#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "support/corpus.hpp"
#include "support/oracles.hpp"
#include "tek/error.hpp"
#include "tek/group.hpp"

using namespace tek;
using namespace tek::testsup;

namespace {

// S3 as composition of permutations of {0,1,2}; the table is derived here
// rather than written down.
std::vector<std::vector<int>> s3_table_from_permutations() {
    std::vector<std::vector<int>> perms;
    std::vector<int> p{0, 1, 2};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            std::vector<int> c(3);
            for (int x = 0; x < 3; ++x) c[x] = perms[i][perms[j][x]];
            t[i][j] = index[c];
        }
    return t;
}

} // namespace

TEST_CASE("from_cayley_table accepts Z2 and rejects a degenerate table") {
    auto z2 = from_cayley_table({{0, 1}, {1, 0}});
    CHECK(z2->order == 2);
    CHECK(z2->inv(1) == 1);

    try {
        from_cayley_table({{0, 1}, {0, 1}});
        FAIL("expected NotAGroup");
    } catch (const Error& e) {
        CHECK(e.name() == "NotAGroup");
        CHECK(std::string(e.what()).find("no inverse for element 1") != std::string::npos);
    }
}

TEST_CASE("S3 from permutation composition is a valid nonabelian group") {
    auto table = s3_table_from_permutations();
    // Oracle: brute-force check of all 216 associativity triples.
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            for (int c = 0; c < 6; ++c)
                REQUIRE(table[table[a][b]][c] == table[a][table[b][c]]);
    auto g = from_cayley_table(table);
    CHECK(g->order == 6);
    bool abelian = true;
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) abelian = abelian && g->mul(a, b) == g->mul(b, a);
    CHECK_FALSE(abelian);
}

TEST_CASE("identity relabeling is recorded") {
    // Z3 with the identity moved to index 1.
    std::vector<std::vector<int>> t{{2, 0, 1}, {0, 1, 2}, {1, 2, 0}};
    std::vector<int> relabel;
    auto g = from_cayley_table(t, &relabel);
    CHECK(g->order == 3);
    CHECK(relabel[1] == 0);
    for (int a = 0; a < 3; ++a) CHECK(g->mul(0, a) == a);
}

TEST_CASE("cyclic groups") {
    CHECK(cyclic(1)->order == 1);
    auto z3 = cyclic(3);
    for (int a = 1; a < 3; ++a) {
        int p = a, ord = 1;
        while (p != 0) { p = z3->mul(p, a); ++ord; }
        CHECK(ord == 3);
    }
    auto z4 = cyclic(4);
    std::vector<int> involutions;
    for (int a = 1; a < 4; ++a)
        if (z4->mul(a, a) == 0) involutions.push_back(a);
    CHECK(involutions == std::vector<int>{2});
}

TEST_CASE("direct products") {
    auto z3 = cyclic(3);
    auto g = direct_product(*z3, *z3);
    CHECK(g->order == 9);
    for (int a = 0; a < 9; ++a) CHECK(g->mul(g->mul(a, a), a) == 0); // exponent 3

    auto same = direct_product(*z3, *cyclic(1));
    CHECK(same->table == z3->table);

    auto klein = direct_product(*cyclic(2), *cyclic(2));
    for (int a = 1; a < 4; ++a) CHECK(klein->mul(a, a) == 0);
}

TEST_CASE("abelianization matches spec examples") {
    CHECK(abelianization(*dihedral(3)).factors == std::vector<long long>{2});
    auto z3z3 = direct_product(*cyclic(3), *cyclic(3));
    CHECK(abelianization(*z3z3).factors == std::vector<long long>{3, 3});
    CHECK(abelianization(*cyclic(1)).factors.empty());
}

TEST_CASE("group law properties over the corpus") {
    for (const auto& [name, g] : corpus(16)) {
        CAPTURE(name);
        // Round trip.
        auto again = from_cayley_table(g->table);
        CHECK(again->table == g->table);
        // Abelianization size against brute-force commutator closure.
        auto ab = abelianization(*g);
        CHECK(ab.group_order() == g->order / brute_commutator_size(*g));
    }
    // Order multiplicativity on a few pairs.
    auto items = corpus(8);
    for (size_t i = 0; i < items.size(); i += 3)
        for (size_t j = 0; j < items.size(); j += 4) {
            auto p = direct_product(*items[i].group, *items[j].group);
            CHECK(p->order == items[i].group->order * items[j].group->order);
        }
}

TEST_CASE("abelian corpus groups recover their factors") {
    CHECK(abelianization(*direct_product(*cyclic(4), *cyclic(2))).factors ==
          std::vector<long long>{2, 4});
    CHECK(abelianization(*cyclic(12)).factors == std::vector<long long>{12});
    CHECK(abelianization(*alternating4()).factors == std::vector<long long>{3});
}
