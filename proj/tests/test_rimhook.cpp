#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "corecrystal/rimhook.hpp"
#include "oracles.hpp"

using namespace corecrystal;

namespace {

std::set<BoxCoord> box_set(const RimHook& h) {
    return std::set<BoxCoord>(h.boxes.begin(), h.boxes.end());
}

// All ways of adding one horizontal or one vertical ell-rim hook.
std::vector<Partition> with_one_hook_added(const Partition& lam, int ell) {
    std::vector<Partition> out;
    for (int r = 1; r <= lam.length() + 1; ++r) {
        if (r > 1 && lam.part(r - 1) < lam.part(r) + ell) continue;
        std::vector<int> parts = lam.parts();
        if (r > static_cast<int>(parts.size())) parts.push_back(ell);
        else parts[r - 1] += ell;
        out.emplace_back(std::move(parts));
    }
    Partition tr = transpose(lam);
    for (int c = 1; c <= tr.length() + 1; ++c) {
        if (c > 1 && tr.part(c - 1) < tr.part(c) + ell) continue;
        std::vector<int> parts = tr.parts();
        if (c > static_cast<int>(parts.size())) parts.push_back(ell);
        else parts[c - 1] += ell;
        out.push_back(transpose(Partition(std::move(parts))));
    }
    return out;
}

} // namespace

TEST_CASE("removable rim hooks on the worked shapes") {
    auto hooks321 = removable_rim_hooks(Partition{3, 2, 1}, 3);
    REQUIRE(hooks321.size() == 2);
    CHECK(box_set(hooks321[0]) == std::set<BoxCoord>{{1, 2}, {1, 3}, {2, 2}});
    CHECK(hooks321[0].kind == HookKind::other);
    CHECK(box_set(hooks321[1]) == std::set<BoxCoord>{{2, 1}, {2, 2}, {3, 1}});
    CHECK(hooks321[1].kind == HookKind::other);

    auto hooks4111 = removable_rim_hooks(Partition{4, 1, 1, 1}, 3);
    REQUIRE(hooks4111.size() == 2);
    CHECK(box_set(hooks4111[0]) == std::set<BoxCoord>{{1, 2}, {1, 3}, {1, 4}});
    CHECK(hooks4111[0].kind == HookKind::horizontal);
    CHECK(box_set(hooks4111[1]) == std::set<BoxCoord>{{2, 1}, {3, 1}, {4, 1}});
    CHECK(hooks4111[1].kind == HookKind::vertical);

    CHECK(removable_rim_hooks(Partition{4, 2, 2, 1, 1}, 3).empty());
    CHECK(removable_rim_hooks(Partition{5, 4, 1}, 6).empty());
}

TEST_CASE("rim hooks agree with the skew-shape oracle") {
    for (int ell = 2; ell <= 5; ++ell)
        for (int n = 0; n <= 12; ++n)
            for (const Partition& lam : partitions_of(n)) {
                auto mine = removable_rim_hooks(lam, ell);
                auto expected = oracles::rim_hooks_by_skew(lam, ell);
                std::set<std::set<BoxCoord>> a, b;
                for (const RimHook& h : mine) {
                    CHECK(h.boxes.size() == static_cast<std::size_t>(ell));
                    CHECK_NOTHROW(remove_hook(lam, h));
                    a.insert(box_set(h));
                }
                for (auto& s : expected) b.insert(s);
                CHECK(a == b);
            }
}

TEST_CASE("hook kinds") {
    for (int ell = 2; ell <= 4; ++ell)
        for (int n = 0; n <= 10; ++n)
            for (const Partition& lam : partitions_of(n))
                for (const RimHook& h : removable_rim_hooks(lam, ell)) {
                    bool one_row = true, one_col = true;
                    for (const BoxCoord& x : h.boxes) {
                        one_row = one_row && x.row == h.boxes.front().row;
                        one_col = one_col && x.col == h.boxes.front().col;
                    }
                    HookKind expect = one_row ? HookKind::horizontal
                                     : one_col ? HookKind::vertical
                                               : HookKind::other;
                    CHECK(h.kind == expect);
                }
}

TEST_CASE("adjacency") {
    RimHook vert{{{2, 1}, {3, 1}, {4, 1}}, HookKind::vertical};
    RimHook horiz{{{1, 1}, {1, 2}, {1, 3}}, HookKind::horizontal};
    CHECK(adjacent(vert, horiz));

    auto hooks = removable_rim_hooks(Partition{4, 1, 1, 1}, 3);
    CHECK_FALSE(adjacent(hooks[0], hooks[1]));

    RimHook far1{{{1, 9}, {1, 10}, {1, 11}}, HookKind::horizontal};
    RimHook far2{{{9, 1}, {10, 1}, {11, 1}}, HookKind::vertical};
    CHECK_FALSE(adjacent(far1, far2));

    RimHook overlap{{{2, 1}, {2, 2}, {3, 1}}, HookKind::other};
    CHECK_THROWS_AS(adjacent(vert, overlap), domain_error);
}

TEST_CASE("core and weight") {
    CHECK(core_and_weight(Partition{5, 4, 1}, 6) ==
          std::make_pair(Partition{5, 4, 1}, 0));
    CHECK(core_and_weight(Partition{12, 1}, 3) == std::make_pair(Partition{3, 1}, 3));
    CHECK(core_and_weight(Partition{}, 3) == std::make_pair(Partition{}, 0));
    for (int ell = 2; ell <= 4; ++ell)
        for (int n = 0; n <= 12; ++n)
            for (const Partition& lam : partitions_of(n)) {
                auto [core, weight] = core_and_weight(lam, ell);
                CHECK(is_core(core, ell));
                CHECK(core.size() + ell * weight == lam.size());
            }
}

TEST_CASE("Carter criterion") {
    CHECK(is_carter(Partition{3, 2}, 2));
    // the worked violations: 3 | h(3,3) = 3 but 3 does not divide h(2,3) = 8,
    // and in (5,4,1) the column-2 pair h(1,2) = 5, h(2,2) = 3
    CHECK(hook_length(Partition{14, 9, 5, 2, 1}, {3, 3}) == 3);
    CHECK(hook_length(Partition{14, 9, 5, 2, 1}, {2, 3}) == 8);
    CHECK_FALSE(is_carter(Partition{14, 9, 5, 2, 1}, 3));
    CHECK(hook_length(Partition{5, 4, 1}, {1, 2}) == 5);
    CHECK(hook_length(Partition{5, 4, 1}, {2, 2}) == 3);
    CHECK_FALSE(is_carter(Partition{5, 4, 1}, 3));
    // The p-adic variant differs on (3,2) at p = 2: 4 and 2 share a column.
    CHECK_FALSE(is_carter_padic(Partition{3, 2}, 2));
    CHECK(is_carter_padic(Partition{2, 1}, 2));
}

TEST_CASE("ell-partitions") {
    CHECK(is_ell_partition(Partition{5, 4, 1}, 2));
    CHECK_FALSE(is_ell_partition(Partition{5, 4, 1}, 3));
    CHECK_FALSE(is_ell_partition(Partition{5, 4, 1}, 4));
    CHECK_FALSE(is_ell_partition(Partition{5, 4, 1}, 5));
    CHECK(is_ell_partition(Partition{5, 4, 1}, 6));
    CHECK_FALSE(is_ell_partition(Partition{5, 4, 1}, 7));
    CHECK(is_ell_partition(Partition{5, 4, 1}, 8));
    CHECK(is_ell_partition(Partition{17, 15, 7, 5, 1, 1}, 3));
    for (int ell = 2; ell <= 5; ++ell)
        for (const Partition& core : oracles::cores_up_to_size(ell, 14))
            CHECK(is_ell_partition(core, ell));
}

TEST_CASE("Carter equals ell-partition on regular partitions") {
    for (int ell = 2; ell <= 5; ++ell)
        for (int n = 0; n <= 14; ++n)
            for (const Partition& lam : partitions_of(n))
                if (is_regular(lam, ell))
                    CHECK(is_ell_partition(lam, ell) == is_carter(lam, ell));
}

TEST_CASE("ell decomposition") {
    EllDecomposition d{Partition{2, 1, 1}, 3, Partition{3, 3, 1, 1}};
    CHECK(compose_ell(d, 3) == (Partition{17, 15, 7, 5, 1, 1}));
    CHECK(compose_ell({Partition{2, 1, 1}, 0, Partition{}}, 3) == (Partition{2, 1, 1}));

    EllDecomposition got = decompose_ell(Partition{9, 4, 2, 1, 1}, 3);
    CHECK(got.mu == (Partition{2, 1, 1}));
    CHECK(got.r == 2);
    CHECK(got.kappa == Partition{1});

    CHECK_THROWS_AS(decompose_ell(Partition{5, 4, 1}, 3), domain_error);
    CHECK_THROWS_AS(compose_ell({Partition{3, 1}, 1, Partition{}}, 3), domain_error);
    CHECK_THROWS_AS(compose_ell({Partition{2, 1, 1}, 0, Partition{2, 1}}, 3), domain_error);

    for (int ell : {2, 3, 4})
        for (int n = 0; n <= 16; ++n)
            for (const Partition& lam : partitions_of(n))
                if (is_ell_partition(lam, ell))
                    CHECK(compose_ell(decompose_ell(lam, ell), ell) == lam);
}

TEST_CASE("JM criterion") {
    CHECK(is_jm(Partition{10, 8, 3, 2, 2, 1, 1, 1, 1, 1}, 3));
    CHECK_FALSE(is_jm(Partition{3, 1, 1, 1}, 3));
    CHECK(is_jm(Partition{1}, 3));
    CHECK(is_jm(Partition{1}, 5));
    CHECK_THROWS_AS(is_jm(Partition{2, 1}, 2), domain_error);
}

TEST_CASE("generalized ell-partitions") {
    CHECK_FALSE(is_generalized_ell(Partition{3, 1, 1, 1}, 3));
    CHECK(is_generalized_ell(Partition{10, 8, 3, 2, 2, 1, 1, 1, 1, 1}, 3));
    for (const Partition& core : oracles::cores_up_to_size(3, 12))
        CHECK(is_generalized_ell(core, 3));
    CHECK_THROWS_AS(is_generalized_ell(Partition{2}, 2), domain_error);
}

TEST_CASE("JM equals generalized over all small partitions") {
    for (int ell : {3, 4})
        for (int n = 0; n <= 14; ++n)
            for (const Partition& lam : partitions_of(n))
                CHECK(is_jm(lam, ell) == is_generalized_ell(lam, ell));
}

TEST_CASE("adding a straight hook preserves failing JM") {
    for (int n = 0; n <= 12; ++n)
        for (const Partition& lam : partitions_of(n))
            if (!is_jm(lam, 3))
                for (const Partition& bigger : with_one_hook_added(lam, 3))
                    CHECK_FALSE(is_jm(bigger, 3));
}

TEST_CASE("JM decomposition") {
    JMDecomposition d{Partition{1}, 3, 2, Partition{2, 1, 1, 1}, Partition{2, 1}};
    Partition lam = compose_jm(d, 3);
    CHECK(lam.part(1) == 15);
    CHECK(lam.length() == 14);
    CHECK(lam == (Partition{15, 10, 8, 6, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1}));
    CHECK(compose_jm({Partition{2, 1}, 0, 0, Partition{}, Partition{}}, 4) ==
          (Partition{2, 1}));

    // (6,4,2,1,1) strips to mu = (1) after the two leading rows and one
    // leading column of step ell-1 are removed.
    JMDecomposition got = decompose_jm(Partition{6, 4, 2, 1, 1}, 3);
    CHECK(got.mu == Partition{1});
    CHECK(got.r == 2);
    CHECK(got.s == 1);
    CHECK(got.rho == Partition{});
    CHECK(got.sigma == Partition{});

    CHECK_THROWS_AS(decompose_jm(Partition{3, 1, 1, 1}, 3), domain_error);
    // mu = (2,1,1) has transposed top difference ell-1 = 2, so it is not a
    // valid centre.
    CHECK_THROWS_AS(
        compose_jm({Partition{2, 1, 1}, 2, 0, Partition{}, Partition{}}, 3),
        domain_error);
    // Empty mu requires rho_{r+1} = 0 or sigma_{s+1} = 0.
    CHECK_THROWS_AS(compose_jm({Partition{}, 0, 0, Partition{1}, Partition{1}}, 3),
                    domain_error);

    for (int ell : {3, 4})
        for (int n = 0; n <= 16; ++n)
            for (const Partition& lam2 : partitions_of(n))
                if (is_jm(lam2, ell))
                    CHECK(compose_jm(decompose_jm(lam2, ell), ell) == lam2);
}

TEST_CASE("composing straight-hook data always lands on JM partitions") {
    // Survey small tuples; every composition must satisfy Fayers' criterion.
    int ell = 3;
    std::vector<Partition> centres;
    for (const Partition& core : oracles::cores_up_to_size(ell, 8)) {
        Partition tr = transpose(core);
        if (core.part(1) - core.part(2) < ell - 1 && tr.part(1) - tr.part(2) < ell - 1)
            centres.push_back(core);
    }
    CHECK(centres.size() >= 2);  // at least the empty partition and (1)
    for (const Partition& mu : centres)
        for (int r = 0; r <= 2; ++r)
            for (int s = 0; s <= 2; ++s)
                for (int rw = 0; rw <= 2; ++rw)
                    for (int sw = 0; sw <= 2; ++sw)
                        for (const Partition& rho : partitions_of(rw))
                            for (const Partition& sigma : partitions_of(sw)) {
                                if (rho.length() > r + 1 || sigma.length() > s + 1)
                                    continue;
                                if (mu.empty() && rho.part(r + 1) != 0 &&
                                    sigma.part(s + 1) != 0)
                                    continue;
                                Partition lam =
                                    compose_jm({mu, r, s, rho, sigma}, ell);
                                CHECK(is_jm(lam, ell));
                            }
}

TEST_CASE("L-partitions") {
    CHECK(is_L_partition(Partition{1, 1, 1}, 3));
    CHECK(is_L_partition(Partition{4, 2, 2, 1, 1}, 3));
    for (int ell : {3, 4})
        for (int n = 0; n <= 14; ++n)
            for (const Partition& lam : partitions_of(n)) {
                // is_L_partition cross-checks its two published forms
                // internally; JM partitions must all qualify.
                bool l = is_L_partition(lam, ell);
                if (is_jm(lam, ell)) CHECK(l);
            }
    CHECK_THROWS_AS(is_L_partition(Partition{1}, 2), domain_error);
}

TEST_CASE("ladder nodes") {
    CHECK(is_ladder_node(Partition{2, 1, 1, 1}, 3));
    CHECK_FALSE(is_ladder_node(Partition{2, 2, 1}, 3));
    CHECK(is_ladder_node(Partition{1, 1, 1}, 3));
    for (int ell : {3, 4}) {
        for (const Partition& core : oracles::cores_up_to_size(ell, 12))
            CHECK(is_ladder_node(core, ell));
        for (int n = 0; n <= 14; ++n)
            for (const Partition& lam : partitions_of(n)) {
                if (is_jm(lam, ell)) CHECK(is_ladder_node(lam, ell));
                if (is_L_partition(lam, ell)) CHECK(is_ladder_node(lam, ell));
            }
    }
}
