#include <doctest.h>

#include <cmath>
#include <random>

#include "moqa/error.hpp"
#include "moqa/quantum.hpp"
#include "oracles/reference_qfa.hpp"
#include "support/random_qfa.hpp"

using namespace moqa;

namespace {

ComplexMatrix real_matrix(std::size_t n, std::initializer_list<double> values) {
    std::vector<Complex> entries(values.begin(), values.end());
    return ComplexMatrix(n, n, std::move(entries));
}

const ComplexMatrix kUp = real_matrix(2, {0.5, 0.5, 0.5, 0.5});
const ComplexMatrix kDown = real_matrix(2, {0.5, -0.5, -0.5, 0.5});

bool matches_formula(const ComplexMatrix& m, const oracle::RealMatrix& expected) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(r, c) != Complex{expected[r][c]}) return false;
    return true;
}

}  // namespace

TEST_CASE("complex matrix basics") {
    CHECK_THROWS_AS(ComplexMatrix(2, 2, {1.0, 2.0, 3.0}), DimensionError);
    CHECK_THROWS_AS(ComplexMatrix(1, 1, {Complex{NAN, 0.0}}), InputError);
    const ComplexMatrix a(2, 2, {Complex{1, 1}, 2.0, 3.0, 4.0});
    CHECK(a.adjoint()(0, 0) == Complex{1, -1});
    CHECK(a.adjoint()(0, 1) == Complex{3.0});
    CHECK(a.trace() == Complex{5, 1});
    CHECK((ComplexMatrix::identity(2) * a) == a);
    CHECK_THROWS_AS(a * ComplexMatrix(3, 1), DimensionError);
    CHECK(real_matrix(2, {2, 0, 0, -1}).min_hermitian_eigenvalue() == doctest::Approx(-1.0));
}

TEST_CASE("validate_observable") {
    SUBCASE("elementary up/down pair is valid") {
        CHECK(validate_observable(Observable(2, {{"up", kUp}, {"down", kDown}})).valid());
    }
    SUBCASE("identity alone is valid") {
        CHECK(validate_observable(Observable::trivial(2)).valid());
    }
    SUBCASE("duplicated projector fails orthogonality and completeness") {
        const auto r = validate_observable(Observable(2, {{"x", kUp}, {"y", kUp}}));
        CHECK_FALSE(r.valid());
        CHECK(r.has(ObservableIssue::NotOrthogonal));
        CHECK(r.has(ObservableIssue::Incomplete));
        CHECK_FALSE(r.structural());
    }
    SUBCASE("non-hermitian and non-idempotent entries are reported") {
        const auto skew = real_matrix(2, {1, 1, 0, 0});
        const auto r = validate_observable(Observable(2, {{"x", skew}, {"y", ComplexMatrix::identity(2) - skew}}));
        CHECK(r.has(ObservableIssue::NotHermitian));
        const auto twice = ComplexMatrix::identity(2) * Complex{2.0};
        CHECK(validate_observable(Observable(2, {{"x", twice}})).has(ObservableIssue::NotIdempotent));
    }
    SUBCASE("duplicate labels") {
        const auto r = validate_observable(Observable(2, {{"x", kUp}, {"x", kDown}}));
        CHECK(r.has(ObservableIssue::DuplicateLabel));
    }
    SUBCASE("shape mismatch is structural and skips numeric checks") {
        const auto r = validate_observable(Observable(2, {{"x", kUp}, {"y", ComplexMatrix::identity(3)}}));
        CHECK(r.structural());
        CHECK(r.violations.size() == 1);
    }
}

TEST_CASE("measure") {
    const auto a = build_mon1qfa(PTSpec::from_chars("a", "ab"));
    const auto rho0 = DensityMatrix(real_matrix(2, {1, 0, 0, 0}));

    SUBCASE("diag(1,0) through O_a gives diag(1/2,1/2)") {
        const auto rho1 = measure(rho0, a.observable("a"));
        CHECK(rho1.matrix().approx_equal(real_matrix(2, {0.5, 0, 0, 0.5}), 1e-15));
    }
    SUBCASE("identity observable leaves the state alone") {
        std::mt19937_64 gen(7);
        const auto u = support::random_unitary(3, gen);
        Eigen::VectorXcd v = u.col(0);
        std::vector<Complex> row(v.data(), v.data() + 3);
        const auto rho = DensityMatrix::from_state(row);
        CHECK(measure(rho, Observable::trivial(3)).matrix().approx_equal(rho.matrix(), 1e-15));
    }
    SUBCASE("measurement channel is idempotent") {
        std::mt19937_64 gen(11);
        for (int i = 0; i < 50; ++i) {
            const std::size_t m = 2 + gen() % 3;
            const auto obs = support::random_observable(m, 1 + gen() % m, gen);
            const auto u = support::random_unitary(m, gen);
            Eigen::VectorXcd v = u.col(0);
            const auto rho = DensityMatrix::from_state(std::vector<Complex>(v.data(), v.data() + m));
            const auto once = measure(rho, obs);
            CHECK(measure(once, obs).matrix().approx_equal(once.matrix(), 1e-12));
            CHECK(std::abs(once.trace() - 1.0) <= 1e-12);
            CHECK(once.violations().empty());
        }
    }
    SUBCASE("dimension mismatch") {
        CHECK_THROWS_AS(measure(rho0, Observable::trivial(3)), DimensionError);
    }
}

TEST_CASE("density matrix invariants") {
    CHECK_THROWS_AS(DensityMatrix(real_matrix(2, {0.5, 0, 0, 0.4})), InputError);
    CHECK_THROWS_AS(DensityMatrix(real_matrix(2, {1.5, 0, 0, -0.5})), InputError);
    CHECK_THROWS_AS(DensityMatrix(real_matrix(2, {0.5, 1, 0, 0.5})), InputError);
    CHECK_NOTHROW(DensityMatrix(real_matrix(2, {0.5, 0.5, 0.5, 0.5})));
}

TEST_CASE("shuffle-ideal projectors follow the entry formula") {
    SUBCASE("[a], alpha a: elementary matrices") {
        const auto s = PTSpec::from_chars("a", "ab");
        CHECK(build_up_projector(s, "a") == kUp);
        CHECK(build_down_projector(s, "a") == kDown);
    }
    SUBCASE("[a,b], alpha b: identity then a block on {2,3}") {
        const auto s = PTSpec::from_chars("ab", "ab");
        const auto up = build_up_projector(s, "b");
        CHECK(up == real_matrix(3, {1, 0, 0, 0, 0.5, 0.5, 0, 0.5, 0.5}));
        CHECK(build_down_projector(s, "a") == real_matrix(3, {0.5, -0.5, 0, -0.5, 0.5, 0, 0, 0, 0}));
    }
    SUBCASE("[a,b,a], alpha a: disjoint blocks on {1,2} and {3,4}") {
        const auto s = PTSpec::from_chars("aba", "ab");
        CHECK(build_up_projector(s, "a") ==
              real_matrix(4, {0.5, 0.5, 0, 0, 0.5, 0.5, 0, 0, 0, 0, 0.5, 0.5, 0, 0, 0.5, 0.5}));
    }
    SUBCASE("every spec up to k=6 over {a,b,c}") {
        for (const auto& s : enumerate_specs(Alphabet::from_chars("abc"), 6)) {
            const auto letters = word_to_string(s.letters());
            for (const auto& alpha : s.support()) {
                const auto up = build_up_projector(s, alpha);
                const auto down = build_down_projector(s, alpha);
                CHECK(matches_formula(up, oracle::up_entry_formula(letters, alpha[0])));
                CHECK(matches_formula(down, oracle::down_entry_formula(letters, alpha[0])));
                CHECK((up + down) == ComplexMatrix::identity(s.k() + 1));
                CHECK((up * down).max_abs() == 0.0);
            }
        }
    }
    SUBCASE("letters outside the sequence are rejected") {
        CHECK_THROWS_AS(build_up_projector(PTSpec::from_chars("a", "ab"), "b"), SpecError);
        CHECK_THROWS_AS(build_down_projector(PTSpec::from_chars("", "ab"), "a"), SpecError);
    }
}

TEST_CASE("build_mon1qfa") {
    SUBCASE("[a] over {a,b}") {
        const auto a = build_mon1qfa(PTSpec::from_chars("a", "ab"));
        CHECK(a.dimension() == 2);
        CHECK(a.initial() == std::vector<Complex>{1.0, 0.0});
        CHECK(a.observable("a").labels() == std::vector<std::string>{"up", "down"});
        CHECK(a.observable("b").labels() == std::vector<std::string>{"pass"});
        CHECK(a.observable("b").outcomes()[0].projector == ComplexMatrix::identity(2));
        CHECK(a.accepting() == std::vector<std::string>{"accept"});
        CHECK(a.accepting_projector() == real_matrix(2, {0, 0, 0, 1}));
    }
    SUBCASE("empty sequence gives the one-dimensional automaton of Sigma*") {
        const auto a = build_mon1qfa(PTSpec::from_chars("", "a"));
        CHECK(a.dimension() == 1);
        for (const auto& w : words_up_to(a.alphabet(), 4)) {
            CHECK(acceptance_probability(a, w) == 1.0);
        }
    }
    SUBCASE("adjacent equal letters are rejected") {
        CHECK_THROWS_AS(PTSpec::from_chars("aa", "ab"), SpecError);
        CHECK_THROWS_AS(PTSpec::from_chars("ac", "ab"), SpecError);
    }
    SUBCASE("all observables valid for k <= 8") {
        for (const auto& s : enumerate_specs(Alphabet::from_chars("ab"), 8)) {
            const auto a = build_mon1qfa(s);
            for (const auto& obs : a.observables()) CHECK(validate_observable(obs, 1e-9).valid());
            CHECK(validate_observable(a.end_observable(), 1e-9).valid());
        }
    }
}

TEST_CASE("Mon1qfa constructor rejects broken tuples") {
    const auto ab = Alphabet::from_chars("ab");
    const auto end = Observable::binary(real_matrix(2, {0, 0, 0, 1}), "accept", "reject");
    const std::vector<Observable> obs{Observable::trivial(2), Observable::trivial(2)};
    CHECK_THROWS_AS(Mon1qfa(ab, {1.0, 1.0}, obs, end, {"accept"}), InputError);
    CHECK_THROWS_AS(Mon1qfa(ab, {1.0, 0.0}, {Observable::trivial(2)}, end, {"accept"}), InputError);
    CHECK_THROWS_AS(Mon1qfa(ab, {1.0, 0.0}, obs, end, {"maybe"}), InputError);
    CHECK_THROWS_AS(Mon1qfa(ab, {1.0, 0.0}, {Observable::trivial(2), Observable(2, {{"x", kUp}})}, end,
                            {"accept"}),
                    InputError);
    CHECK_NOTHROW(Mon1qfa(ab, {1.0, 0.0}, obs, end, {"accept", "reject"}));
}

TEST_CASE("acceptance_probability hand values") {
    const auto a = build_mon1qfa(PTSpec::from_chars("a", "ab"));
    const auto ab = build_mon1qfa(PTSpec::from_chars("ab", "ab"));
    CHECK(acceptance_probability(a, word_from_chars("a")) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(acceptance_probability(a, {}) == 0.0);
    CHECK(acceptance_probability(ab, word_from_chars("ab")) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(acceptance_probability(ab, word_from_chars("ba")) == 0.0);
    CHECK_THROWS_AS(acceptance_probability(a, word_from_chars("ac")), InputError);
}

TEST_CASE("density-matrix route agrees with trajectory enumeration") {
    for (const auto& s : enumerate_specs(Alphabet::from_chars("abc"), 3)) {
        const auto a = build_mon1qfa(s);
        const auto letters = word_to_string(s.letters());
        for (const auto& w : words_up_to(s.alphabet(), 5)) {
            const double p = acceptance_probability(a, w);
            CHECK(std::abs(p - oracle::trajectory_probability(letters, word_to_string(w))) <= 1e-12);
            // dyadic: p * 2^(2 * |w|) is an integer
            const double scaled = std::ldexp(p, static_cast<int>(2 * w.size()));
            CHECK(std::abs(scaled - std::round(scaled)) <= 1e-9);
        }
    }
    std::mt19937_64 gen(3);
    const auto alphabet = Alphabet::from_chars("ab");
    for (int i = 0; i < 30; ++i) {
        const auto a = support::random_mon1qfa(2 + gen() % 3, alphabet, gen);
        const auto w = support::random_word(alphabet, 6, gen);
        CHECK(std::abs(acceptance_probability(a, w) - oracle::trajectory_probability(a, w)) <= 1e-12);
    }
}

TEST_CASE("acceptance is literally idempotent and order-invariant on random automata") {
    std::mt19937_64 gen(2024);
    const auto alphabet = Alphabet::from_chars("abc");
    for (int i = 0; i < 200; ++i) {
        const auto a = support::random_mon1qfa(2 + gen() % 4, alphabet, gen);
        auto x = support::random_word(alphabet, 4, gen);
        const auto y = support::random_word(alphabet, 4, gen);
        const auto& sym = alphabet[gen() % alphabet.size()];
        auto once = x;
        once.push_back(sym);
        once.insert(once.end(), y.begin(), y.end());
        x.push_back(sym);
        x.push_back(sym);
        x.insert(x.end(), y.begin(), y.end());
        const double p_once = acceptance_probability(a, once);
        CHECK(std::abs(p_once - acceptance_probability(a, x)) <= 1e-9);

        std::vector<Observable> reversed;
        for (const auto& obs : a.observables()) {
            auto outcomes = obs.outcomes();
            std::reverse(outcomes.begin(), outcomes.end());
            reversed.emplace_back(obs.dimension(), std::move(outcomes));
        }
        auto end = a.end_observable().outcomes();
        std::reverse(end.begin(), end.end());
        const Mon1qfa permuted(a.alphabet(), a.initial(), std::move(reversed),
                               Observable(a.dimension(), std::move(end)), a.accepting());
        CHECK(std::abs(p_once - acceptance_probability(permuted, once)) <= 1e-12);
    }
}

TEST_CASE("trace is preserved along cascades") {
    for (const auto& s : enumerate_specs(Alphabet::from_chars("ab"), 6)) {
        const auto a = build_mon1qfa(s);
        std::mt19937_64 gen(s.k());
        for (int i = 0; i < 5; ++i) {
            for (const auto& rho : cascade(a, support::random_word(s.alphabet(), 12, gen))) {
                CHECK(std::abs(rho.trace() - 1.0) <= 1e-9);
            }
        }
    }
}

TEST_CASE("cutpoint_params") {
    CHECK(cutpoint_params(1).lambda == 0.125);
    CHECK(cutpoint_params(1).delta == 0.0625);
    CHECK(cutpoint_params(2).lambda == 1.0 / 32);
    CHECK(cutpoint_params(2).delta == 1.0 / 64);
    CHECK(cutpoint_params(0).lambda == 0.5);
    CHECK(cutpoint_params(0).delta == 0.25);
    const auto big = cutpoint_params(500);
    CHECK(big.lambda == std::ldexp(1.0, -1001));
    CHECK(big.delta == std::ldexp(1.0, -1002));
    CHECK(big.delta > 0.0);
}

TEST_CASE("recognizes_with_cutpoint") {
    const auto spec = PTSpec::from_chars("a", "ab");
    const auto a = build_mon1qfa(spec);
    const auto words = words_up_to(spec.alphabet(), 4);
    auto member = [&](const Word& w) { return spec.matches(w); };

    const auto good = recognizes_with_cutpoint(a, 0.125, 0.0625, member, words);
    CHECK(good.pass);
    CHECK(good.entries.size() == 31);
    for (const auto& e : good.entries) {
        CHECK(e.probability == (e.member ? 0.5 : 0.0));
    }

    const auto bad = recognizes_with_cutpoint(a, 0.6, 0.0625, member, words);
    CHECK_FALSE(bad.pass);
    CHECK(bad.entries[1].word == word_from_chars("a"));
    CHECK(bad.entries[1].member);
    CHECK_FALSE(bad.entries[1].accepted);

    CHECK(recognizes_with_cutpoint(a, 0.6, 0.0625, member, std::span<const Word>{}).pass);
    CHECK_THROWS_AS(recognizes_with_cutpoint(a, 0.1, 0.0, member, words), InputError);
}
