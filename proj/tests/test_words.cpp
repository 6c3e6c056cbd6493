#include <doctest.h>

#include <random>

#include "treelattice/fixtures.hpp"
#include "treelattice/oracle.hpp"
#include "treelattice/words.hpp"

using namespace treelattice;

namespace {

Word w(std::initializer_list<Letter> l) { return Word{std::vector<Letter>(l)}; }

Word random_word(std::mt19937& rng, int rank, int length) {
    std::uniform_int_distribution<int> pick(1, rank);
    std::vector<Letter> letters;
    for (int i = 0; i < length; ++i) letters.push_back(rng() % 2 ? pick(rng) : -pick(rng));
    return reduce(letters);
}

Walk triangle(const RegularGraph& g) {
    const std::vector<Vertex> v{0, 1, 2, 0};
    return walk_from_vertices(g, v);
}

}  // namespace

TEST_CASE("free reduction") {
    CHECK(reduce(std::vector<Letter>{1, -1}).empty());
    CHECK(reduce(std::vector<Letter>{1, 2, -2, 1}) == w({1, 1}));
    CHECK(reduce(std::vector<Letter>{3, 1, 2, -2, -1, 4}) == w({3, 4}));
    CHECK_THROWS_AS(reduce(std::vector<Letter>{0}), std::invalid_argument);
    CHECK_THROWS_AS(reduce(std::vector<Letter>{4}, 3), std::invalid_argument);
}

TEST_CASE("reduction matches the repeated-scan oracle") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(1, 2);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<Letter> letters;
        for (int i = 0; i < 50; ++i) letters.push_back(rng() % 2 ? pick(rng) : -pick(rng));
        CHECK(reduce(letters).letters == oracle::naive_reduce(letters));
    }
}

TEST_CASE("group operations") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Word a = random_word(rng, 3, 8), b = random_word(rng, 3, 8), c = random_word(rng, 3, 8);
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
        CHECK(multiply(a, inverse(a)).empty());
        CHECK(inverse(inverse(a)) == a);
        CHECK(power(a, 3) == multiply(a, multiply(a, a)));
        CHECK(power(a, -2) == inverse(power(a, 2)));
        CHECK(power(a, 0).empty());
    }
}

TEST_CASE("cyclic reduction") {
    auto check = [](Word in, Word core, Word conj) {
        const CyclicReduction r = cyclic_reduce(in);
        CHECK(r.core == core);
        CHECK(r.conjugator == conj);
        CHECK(multiply(multiply(r.conjugator, r.core), inverse(r.conjugator)) == in);
    };
    check(w({-2, 1, 2}), w({1}), w({-2}));
    check(w({1, 2}), w({1, 2}), w({}));
    check(w({1, 2, -1}), w({2}), w({1}));
    check(w({}), w({}), w({}));
}

TEST_CASE("word text round trip") {
    const Word x = w({1, -2, 3});
    CHECK(parse_word(to_string(x), 3) == x);
    CHECK(parse_word("+1 -2 +3", 3) == x);
    CHECK(parse_word("1 -2 2 3", 3) == w({1, 3}));
    CHECK_THROWS_AS(parse_word("1 a", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("5", 3), std::invalid_argument);
}

TEST_CASE("rotations and primitive roots") {
    const std::vector<int> s{3, 1, 2, 1, 2};
    CHECK(canonical_rotation<int>(s) == std::vector<int>{1, 2, 1, 2, 3});
    for (std::size_t r = 0; r < s.size(); ++r)
        CHECK(canonical_rotation<int>(rotate_to<int>(s, r)) == canonical_rotation<int>(s));
    CHECK(is_rotation_of<int>(std::vector<int>{2, 3, 1}, std::vector<int>{1, 2, 3}));
    CHECK_FALSE(is_rotation_of<int>(std::vector<int>{3, 2, 1}, std::vector<int>{1, 2, 3}));

    auto root = primitive_root<char>(std::vector<char>{'a', 'b', 'a', 'b'});
    CHECK(root.root == std::vector<char>{'a', 'b'});
    CHECK(root.nu == 2);
    root = primitive_root<char>(std::vector<char>{'a'});
    CHECK(root.nu == 1);
    root = primitive_root<char>(std::vector<char>{'a', 'a', 'b', 'a', 'a', 'b'});
    CHECK(root.root == std::vector<char>{'a', 'a', 'b'});
    CHECK(root.nu == 2);
    CHECK_THROWS(primitive_root<char>(std::vector<char>{}));
}

TEST_CASE("walks") {
    const RegularGraph g = fixtures::k4();
    const Walk t = triangle(g);
    CHECK(t.size() == 3);
    CHECK(t.is_closed(g));
    CHECK(vertices_of_walk(g, t) == std::vector<Vertex>{0, 1, 2, 0});
    const std::vector<Vertex> bad{0, 1, 1};
    CHECK_THROWS_AS(walk_from_vertices(g, bad), std::invalid_argument);

    Walk back = t;
    for (auto it = t.arcs.rbegin(); it != t.arcs.rend(); ++it) back.arcs.push_back(g.reverse(*it));
    CHECK(reduce_walk(g, back).empty());
    CHECK(reduce_walk(g, t) == t);
    CHECK(is_non_backtracking(g, t.arcs));
    CHECK_FALSE(is_non_backtracking(g, back.arcs));
}

TEST_CASE("walk reduction matches the repeated-scan oracle") {
    const RegularGraph g = fixtures::petersen();
    std::mt19937 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        Walk walk{0, {}};
        Vertex at = 0;
        for (int i = 0; i < 30; ++i) {
            const auto out = g.out_arcs(at);
            walk.arcs.push_back(out[rng() % out.size()]);
            at = g.terminus(walk.arcs.back());
        }
        // Encode arc a as a letter so that reversal is negation.
        std::vector<Letter> letters;
        for (ArcId a : walk.arcs) letters.push_back(a < g.reverse(a) ? a + 1 : -(g.reverse(a) + 1));
        std::vector<ArcId> expected;
        for (Letter l : oracle::naive_reduce(letters)) expected.push_back(l > 0 ? l - 1 : g.reverse(-l - 1));
        CHECK(reduce_walk(g, walk).arcs == expected);
    }
}

TEST_CASE("spanning tree generators") {
    for (const RegularGraph& g : {fixtures::k4(), fixtures::petersen(), fixtures::k33(), fixtures::k5()}) {
        const SpanningTree st = SpanningTree::bfs(g);
        CHECK(st.rank() == g.num_edges() - g.num_vertices() + 1);
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            const auto path = st.path_from_base(g, v);
            Walk walk{st.base(), path};
            CHECK(walk.end(g) == v);
            CHECK(word_of_walk(g, st, Walk{st.base(), {}}).empty());
        }
        for (Letter l = 1; l <= st.rank(); ++l) {
            const ArcId a = st.arc_of_letter(l);
            CHECK(st.letter_of_arc(a) == l);
            CHECK(st.letter_of_arc(g.reverse(a)) == -l);
            CHECK(g.origin(a) < g.terminus(a));
            CHECK(st.arc_of_letter(-l) == g.reverse(a));
        }
    }
}

TEST_CASE("K4 star tree: triangle walk is one generator") {
    const RegularGraph g = fixtures::k4();
    const SpanningTree st = SpanningTree::bfs(g);
    for (Vertex v = 1; v < 4; ++v) CHECK(st.parent_arc(v) == *g.find_arc(0, v));
    const Word word = word_of_walk(g, st, triangle(g));
    REQUIRE(word.size() == 1);
    const ArcId gen = st.arc_of_letter(std::abs(word.letters[0]));
    CHECK(g.origin(gen) == 1);
    CHECK(g.terminus(gen) == 2);
    CHECK(word.letters[0] == 1);

    const Walk back = reduce_walk(g, walk_of_word(g, st, word));
    CHECK(back == triangle(g));
    CHECK(reduce_walk(g, walk_of_word(g, st, power(word, 2))).size() == 6);
}

TEST_CASE("walk and word translations invert each other") {
    for (const RegularGraph& g : {fixtures::k4(), fixtures::petersen()}) {
        const SpanningTree st = SpanningTree::bfs(g);
        std::mt19937 rng(5);
        for (int trial = 0; trial < 100; ++trial) {
            const Word x = random_word(rng, st.rank(), 6);
            CHECK(word_of_walk(g, st, walk_of_word(g, st, x)) == x);
        }
        Walk closed = triangle(fixtures::k4());
        if (g.num_vertices() == 4) {
            Walk both = closed;
            for (auto it = closed.arcs.rbegin(); it != closed.arcs.rend(); ++it) both.arcs.push_back(g.reverse(*it));
            CHECK(word_of_walk(g, st, both).empty());
        }
    }
}

TEST_CASE("class descriptors") {
    const RegularGraph g = fixtures::k4();
    const SpanningTree st = SpanningTree::bfs(g);
    const Word t = word_of_walk(g, st, triangle(g));

    const ClassDescriptor k = class_of_word(g, st, t);
    CHECK(k.mu == 3);
    CHECK(k.nu == 1);
    CHECK(k.primitive_walk == k.cyclic_walk);

    const ClassDescriptor k2 = class_of_word(g, st, power(t, 2));
    CHECK(k2.mu == 6);
    CHECK(k2.nu == 2);
    CHECK(k2.primitive_walk == k.primitive_walk);

    CHECK_FALSE(same_class(g, st, t, inverse(t)));
    CHECK_FALSE(same_class(g, st, t, power(t, 2)));
    CHECK_THROWS_AS(class_of_word(g, st, Word{}), std::invalid_argument);
    CHECK(class_of_closed_walk(g, triangle(g)) == k);
}

TEST_CASE("descriptor is conjugation invariant and powers scale") {
    for (const RegularGraph& g : {fixtures::k4(), fixtures::petersen(), fixtures::k33()}) {
        const SpanningTree st = SpanningTree::bfs(g);
        std::mt19937 rng(13);
        for (int trial = 0; trial < 100; ++trial) {
            const Word x = random_word(rng, st.rank(), 5);
            if (x.empty()) continue;
            const Word u = random_word(rng, st.rank(), 4);
            const ClassDescriptor k = class_of_word(g, st, x);
            CHECK(class_of_word(g, st, multiply(multiply(u, x), inverse(u))) == k);
            CHECK(same_class(g, st, x, multiply(multiply(u, x), inverse(u))));
            CHECK(k.mu == k.nu * k.primitive_length());
            CHECK(static_cast<int>(k.cyclic_walk.size()) == k.mu);
            CHECK(primitive_root<ArcId>(k.primitive_walk).nu == 1);
            for (int p : {2, 3}) {
                const ClassDescriptor kp = class_of_word(g, st, power(x, p));
                CHECK(kp.mu == p * k.mu);
                CHECK(kp.nu == p * k.nu);
            }
        }
    }
}

TEST_CASE("class enumeration") {
    const RegularGraph k4 = fixtures::k4();
    CHECK(enumerate_classes(k4, 2).empty());
    const auto classes = enumerate_classes(k4, 3);
    CHECK(classes.size() == 8);
    for (const auto& k : classes) CHECK(k.mu == 3);

    for (const RegularGraph& g : {fixtures::k4(), fixtures::petersen(), fixtures::k33()}) {
        const int mu_max = g.num_vertices() == 4 ? 5 : 6;
        const auto found = enumerate_classes(g, mu_max);
        const auto brute = oracle::brute_force_classes(g, mu_max);
        CHECK(found.size() == brute.size());
        const SpanningTree st = SpanningTree::bfs(g);
        for (std::size_t i = 0; i < found.size(); ++i) {
            CHECK(brute.count(found[i].cyclic_walk) == 1);
            if (i > 0) CHECK(found[i - 1] < found[i]);
            CHECK(class_of_word(g, st, representative_word(g, st, found[i])) == found[i]);
        }
    }
}
