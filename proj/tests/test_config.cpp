#include <doctest.h>

#include <random>

#include <tdeg/config.hpp>
#include <tdeg/errors.hpp>
#include <tdeg/json_io.hpp>

#include "support.hpp"

using namespace tdeg;

TEST_CASE("Cartan matrices")
{
    const CartanMatrix a2(CartanKind::A2);
    const CartanMatrix b2(CartanKind::B2);
    const CartanMatrix g2(CartanKind::G2);
    CHECK(a2.entry(1, 2) == -1);
    CHECK(a2.entry(2, 1) == -1);
    CHECK(b2.entry(2, 1) == -2);
    CHECK(g2.entry(2, 1) == -3);
    CHECK(g2.entry(1, 1) == 2);
    CHECK(g2.entry(2, 2) == 2);
    CHECK(a2.inverse(1, 1) == Rational(2, 3));
    CHECK(a2.inverse(1, 2) == Rational(1, 3));
    CHECK(g2.inverse(2, 1) == Rational(3));
    CHECK_THROWS_AS(a2.entry(0, 1), DomainError);

    for (auto kind : testing_support::all_kinds) {
        const CartanMatrix k(kind);
        CHECK(4 - k.k12() * k.k21() > 0);
        for (int i = 1; i <= 2; ++i) {
            for (int j = 1; j <= 2; ++j) {
                Rational s = 0;
                for (int m = 1; m <= 2; ++m) {
                    s += k.entry(i, m) * k.inverse(m, j);
                }
                CHECK(s == Rational(i == j ? 1 : 0));
            }
        }
        CHECK(parse_cartan_kind(to_string(kind)) == kind);
    }
    CHECK_THROWS_AS(parse_cartan_kind("C2"), ConfigError);
}

TEST_CASE("critical_set")
{
    const std::vector<int> none;
    CHECK(critical_set(none, 5) == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(critical_set(std::vector<int>{1}, 5) == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(critical_set(std::vector<int>{2}, 4) == std::vector<int>{1, 2, 3, 4});
    CHECK_THROWS_AS(critical_set(std::vector<int>{0}, 4), DomainError);
    CHECK_THROWS_AS(critical_set(none, 0), DomainError);

    const auto cfg = testing_support::make_config(0, CartanKind::A2, {{1, 0}, {0, 2}, {3, 1}});
    CHECK(critical_set(cfg, 2, 7) == std::vector<int>{1, 2, 3, 4, 5, 6, 7});
    CHECK_THROWS_AS(critical_set(cfg, 3, 7), DomainError);

    SUBCASE("matches subset enumeration")
    {
        std::mt19937_64 rng(0x5eed'0101);
        std::uniform_int_distribution<int> count_d(0, 6);
        std::uniform_int_distribution<int> w_d(1, 5);
        std::uniform_int_distribution<int> bound_d(1, 30);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<int> w(static_cast<std::size_t>(count_d(rng)));
            for (auto &x : w) {
                x = w_d(rng);
            }
            const int bound = bound_d(rng);
            const auto got = critical_set(w, bound);
            const auto brute = oracle::critical_multiples(w, bound);
            REQUIRE(std::vector<int>(brute.begin(), brute.end()) == got);
            std::vector<int> all;
            for (int k = 1; k <= bound; ++k) {
                all.push_back(k);
            }
            REQUIRE(got == all);
        }
    }
}

TEST_CASE("rho_from_ramification")
{
    const CartanMatrix a2(CartanKind::A2);
    CHECK(rho_from_ramification(a2, 0, 1) == RhoPair{Rational(4, 3), Rational(5, 3)});
    CHECK(rho_from_ramification(a2, 0, 2) == RhoPair{Rational(5, 3), Rational(7, 3)});
    for (auto kind : testing_support::all_kinds) {
        CHECK(rho_from_ramification(CartanMatrix(kind), 0, 0) == RhoPair{Rational(1), Rational(1)});
    }
    CHECK_THROWS_AS(rho_from_ramification(a2, -1, 0), DomainError);

    for (int n1 = 0; n1 <= 12; ++n1) {
        for (int n2 = 0; n2 <= 12; ++n2) {
            const auto r = rho_from_ramification(a2, n1, n2);
            CHECK(r.rho1_over_4pi - r.rho2_over_4pi == Rational(n1 - n2, 3));
            if ((n1 - n2) % 3 != 0) {
                CHECK(std::holds_alternative<int>(rho_interval_index(r.rho1_over_4pi)));
                CHECK(std::holds_alternative<int>(rho_interval_index(r.rho2_over_4pi)));
            }
        }
    }
}

TEST_CASE("rho_interval_index")
{
    CHECK(rho_interval_index(Rational(5, 3)) == IntervalIndex{1});
    CHECK(rho_interval_index(Rational(7, 3)) == IntervalIndex{2});
    CHECK(rho_interval_index(Rational(4, 3)) == IntervalIndex{1});
    CHECK(rho_interval_index(Rational(1, 2)) == IntervalIndex{0});
    CHECK(std::holds_alternative<Critical>(rho_interval_index(Rational(3))));
    CHECK_THROWS_AS(rho_interval_index(Rational(0)), DomainError);
    CHECK_THROWS_AS(rho_interval_index(Rational(-1, 3)), DomainError);
    CHECK(format_rational(Rational(4, 3)) == "4/3");
    CHECK(format_rational(Rational(6, 2)) == "3");
}

TEST_CASE("ProblemConfig validation")
{
    using P = SingularPoint;
    CHECK_THROWS_AS(ProblemConfig(3, {}, std::nullopt), ConfigError);
    CHECK_THROWS_AS(ProblemConfig(-65, {}, std::nullopt), ConfigError);
    CHECK_NOTHROW(ProblemConfig(-64, {}, std::nullopt));
    CHECK_THROWS_AS(ProblemConfig(2, {P{"p", 0, 0}}, std::nullopt), ConfigError);
    CHECK_THROWS_AS(ProblemConfig(2, {P{"p", -1, 2}}, std::nullopt), ConfigError);
    CHECK_THROWS_AS(ProblemConfig(2, {P{"p", 1, 0}, P{"p", 0, 1}}, std::nullopt), ConfigError);
    CHECK_THROWS_AS(ProblemConfig(2, {}, std::nullopt, -1), ConfigError);

    const ProblemConfig no_chi(std::nullopt, {}, std::nullopt);
    CHECK_THROWS_AS(no_chi.chi(), ConfigError);
    CHECK_THROWS_AS(no_chi.cartan(), ConfigError);

    const ProblemConfig c(0, {P{"a", 1, 0}, P{"b", 0, 2}, P{"c", 3, 1}}, CartanMatrix(CartanKind::B2));
    CHECK(c.s1().size() == 2);
    CHECK(c.s2().size() == 2);
    CHECK(c.union_size() == 3);
    CHECK(c.find("b")->alpha2 == 2);
    CHECK(c.find("z") == nullptr);
    CHECK_FALSE(c.find("c")->within_proven_range());
    CHECK(c.with_swapped_weights().find("c")->alpha1 == 1);
    CHECK(c.with_truncation(5).truncation() == 5);
}

TEST_CASE("config JSON")
{
    const auto c = parse_config(R"({"chi": 2, "cartan": "A2", "truncation": 8,
                                   "points": [{"label": "p", "alpha1": 0, "alpha2": 1}]})");
    CHECK(c.chi() == 2);
    CHECK(c.cartan().kind() == CartanKind::A2);
    CHECK(c.truncation() == 8);
    REQUIRE(c.points().size() == 1);
    CHECK(c.points()[0] == SingularPoint{"p", 0, 1});
    CHECK(parse_config(to_json(c).dump()).points() == c.points());

    const auto defaults = parse_config(R"({"cartan": "G2"})");
    CHECK_FALSE(defaults.has_chi());
    CHECK(defaults.truncation() == default_truncation);

    SUBCASE("syntax errors carry line and column")
    {
        try {
            parse_config("{\n  \"chi\": 2,\n  \"cartan\": A2\n}", "cfg.json");
            FAIL("expected ConfigError");
        } catch (const ConfigError &e) {
            CHECK(std::string(e.what()).rfind("cfg.json:3:", 0) == 0);
        }
    }
    CHECK_THROWS_AS(parse_config(R"({"chi": "two"})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"chi": 2, "extra": 1})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"points": [{"alpha1": 1}]})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"cartan": "F4"})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"([1, 2])"), ConfigError);
}
