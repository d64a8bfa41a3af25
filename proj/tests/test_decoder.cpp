#include <map>
#include <random>

#include "doctest.h"
#include "gag/bounds.hpp"
#include "gag/decoder.hpp"
#include "gag/simulation.hpp"
#include "oracles.hpp"

using namespace gag;

namespace {

GagCode counts_code(std::uint32_t p, unsigned e, std::map<unsigned, std::size_t> counts, std::size_t g) {
    PlaceSelection sel;
    sel.counts = std::move(counts);
    return build_code(p, e, sel, g);
}

Word random_word(const GagCode& code, std::mt19937_64& rng) {
    Word w(code.length());
    for (auto& c : w) c = BaseElem{static_cast<std::uint32_t>(rng() % code.tower().q())};
    return w;
}

std::vector<ExtElem> padded(const Poly<ExtElem>& f, std::size_t k) {
    std::vector<ExtElem> c(k, ExtElem{0});
    std::copy(f.coeffs.begin(), f.coeffs.end(), c.begin());
    return c;
}

// Checks rs_decode on y against the exhaustive oracle.
void check_against_oracle(const Decoder& dec, const oracle::LiftedCodebook& book, const std::vector<ExtElem>& y) {
    const long idx = oracle::nearest_within(book, y, dec.radius());
    const auto got = dec.rs_decode(LiftedWord{y});
    if (idx < 0) {
        REQUIRE(std::holds_alternative<FailureReason>(got));
    } else {
        REQUIRE(std::holds_alternative<Poly<ExtElem>>(got));
        REQUIRE(padded(std::get<Poly<ExtElem>>(got), dec.code().dimension()) == book.polys[static_cast<std::size_t>(idx)]);
    }
}

}  // namespace

TEST_CASE("failure reasons have stable names") {
    CHECK(to_string(FailureReason::too_many_errors) == "too-many-errors");
    CHECK(to_string(FailureReason::frobenius_inconsistent) == "frobenius-inconsistent");
    CHECK(to_string(FailureReason::degree_overflow) == "degree-overflow");
}

TEST_CASE("lift expands each nonzero block to exactly its degree") {
    std::mt19937_64 rng(1);
    const auto code = counts_code(2, 1, {{1, 2}, {2, 1}, {3, 2}, {6, 2}}, 4);
    const Decoder dec(code);
    const Word zero(code.length(), BaseElem{0});
    CHECK(weight(dec.lift(zero).symbols) == 0);
    for (int trial = 0; trial < 500; ++trial) {
        Word x(code.length(), BaseElem{0});
        std::size_t expected = 0;
        for (std::size_t i = 0; i < code.places().size(); ++i) {
            if (rng() % 3 == 0) continue;
            const unsigned d = code.places()[i].degree;
            const std::size_t at = code.block_offset(i) + rng() % d;
            x[at] = BaseElem{1};
            for (unsigned j = 0; j < d; ++j)
                if (rng() % 2) x[code.block_offset(i) + j] = BaseElem{1};
            expected += d;
        }
        const auto lifted = dec.lift(x).symbols;
        REQUIRE(weight(lifted) == expected);
        // Within each block, consecutive symbols are Frobenius images.
        for (std::size_t i = 0; i < code.places().size(); ++i) {
            const unsigned d = code.places()[i].degree;
            for (unsigned j = 0; j + 1 < d; ++j) {
                const std::size_t at = code.block_offset(i) + j;
                REQUIRE(lifted[at + 1] == code.tower().frobenius(lifted[at]));
            }
        }
    }
}

TEST_CASE("lift is injective") {
    std::mt19937_64 rng(2);
    const auto code = counts_code(3, 1, {{1, 3}, {2, 3}, {4, 2}}, 3);
    const Decoder dec(code);
    std::map<std::vector<ExtElem>, Word> seen;
    for (int trial = 0; trial < 2000; ++trial) {
        const Word x = random_word(code, rng);
        auto [it, inserted] = seen.emplace(dec.lift(x).symbols, x);
        if (!inserted) REQUIRE(it->second == x);
    }
}

TEST_CASE("lifted codewords are evaluations of an F_q polynomial of degree at most g") {
    std::mt19937_64 rng(3);
    const auto code = counts_code(2, 3, {{1, 8}, {2, 10}, {3, 4}}, 15);
    const Decoder dec(code);
    const auto& t = code.tower();
    const auto& F = t.top();
    for (std::size_t trial = 0; trial < code.length(); ++trial) {
        Word msg(code.dimension());
        for (auto& c : msg) c = BaseElem{static_cast<std::uint32_t>(rng() % 8)};
        const auto lifted = dec.lift(code.encode(msg)).symbols;
        // Lagrange interpolation on the first k points, then check every point.
        const auto& xs = code.eval_points();
        const std::size_t k = code.dimension();
        for (std::size_t i = 0; i < xs.size(); ++i) {
            ExtElem value = F.zero();
            for (std::size_t a = 0; a < k; ++a) {
                ExtElem basis = F.one();
                for (std::size_t b = 0; b < k; ++b)
                    if (b != a) basis = F.mul(basis, F.div(F.sub(xs[i], xs[b]), F.sub(xs[a], xs[b])));
                value = F.add(value, F.mul(lifted[a], basis));
            }
            REQUIRE(value == lifted[i]);
        }
        REQUIRE(lifted == code.evaluate(t.lift(code.message_polynomial(msg))));
    }
}

TEST_CASE("rs_decode matches the exhaustive nearest-codeword oracle") {
    SUBCASE("every word of a 16-codeword lifted code") {
        const auto code = counts_code(2, 1, {{1, 2}, {2, 1}}, 1);
        const Decoder dec(code);
        REQUIRE(dec.radius() == 1);
        const auto book = oracle::lifted_codebook(code);
        REQUIRE(book.words.size() == 16);
        std::vector<ExtElem> y(4);
        for (std::uint32_t idx = 0; idx < 256; ++idx) {
            for (std::size_t i = 0; i < 4; ++i) y[i] = ExtElem{idx >> (2 * i) & 3};
            check_against_oracle(dec, book, y);
        }
    }
    SUBCASE("sampled words on larger lifted codes") {
        struct Case {
            std::uint32_t p;
            unsigned e;
            std::map<unsigned, std::size_t> counts;
            std::size_t g;
        };
        for (const auto& c : {Case{3, 1, {{1, 3}, {2, 3}}, 2}, Case{2, 2, {{1, 4}, {2, 6}}, 1},
                              Case{2, 1, {{1, 2}, {2, 1}, {3, 2}}, 1}}) {
            const auto code = counts_code(c.p, c.e, c.counts, c.g);
            const Decoder dec(code);
            const auto book = oracle::lifted_codebook(code);
            const auto& F = code.tower().top();
            std::mt19937_64 rng(c.p * 100 + c.g);
            for (int trial = 0; trial < 1500; ++trial) {
                // Codeword plus e uniformly placed random errors, e up to t + 2.
                auto y = book.words[rng() % book.words.size()];
                const std::size_t e = rng() % (dec.radius() + 3);
                for (std::size_t j = 0; j < e; ++j) y[rng() % y.size()] = F.element(rng() % F.size());
                check_against_oracle(dec, book, y);
            }
        }
    }
}

TEST_CASE("decoder radius override") {
    const auto code = counts_code(2, 3, {{1, 8}, {2, 4}}, 5);
    CHECK(Decoder(code).radius() == 5);
    CHECK(Decoder(code, 2).radius() == 2);
    CHECK_THROWS_AS(Decoder(code, 6), std::invalid_argument);
    // A lowered radius rejects what the full radius would accept.
    std::mt19937_64 rng(4);
    const Decoder narrow(code, 1);
    auto trial = make_trial(code, 3, rng);
    CHECK(std::holds_alternative<DecodeSuccess>(Decoder(code).decode(trial.received)));
    const auto result = narrow.decode(trial.received);
    REQUIRE(std::holds_alternative<DecodeFailure>(result));
}

TEST_CASE("decoding the uncorrupted codeword") {
    std::mt19937_64 rng(5);
    const auto code = counts_code(3, 1, {{1, 3}, {2, 3}, {3, 8}}, 12);
    const Decoder dec(code);
    for (int trial = 0; trial < 50; ++trial) {
        auto t = make_trial(code, 0, rng);
        const auto result = dec.decode(t.received);
        REQUIRE(std::holds_alternative<DecodeSuccess>(result));
        const auto& ok = std::get<DecodeSuccess>(result);
        REQUIRE(ok.message == t.message);
        REQUIRE(ok.codeword == t.codeword);
        REQUIRE(ok.error_count == 0);
    }
}

TEST_CASE("the degree-4 place defeats single-error correction in the q = 17 code") {
    const auto code = counts_code(17, 1, {{1, 17}, {4, 1}}, 13);
    const Decoder dec(code);
    REQUIRE(dec.radius() == 3);
    std::mt19937_64 rng(6);
    Word msg(code.dimension());
    for (auto& c : msg) c = BaseElem{static_cast<std::uint32_t>(rng() % 17)};
    const auto codeword = code.encode(msg);
    std::size_t failures = 0, successes = 0;
    for (std::size_t pos = 0; pos < code.length(); ++pos) {
        for (std::uint32_t offset = 1; offset < 17; ++offset) {
            Word received = codeword;
            received[pos] = code.tower().base().add(received[pos], BaseElem{offset});
            const auto result = dec.decode(received);
            const bool in_quartic = pos >= 17;
            if (std::holds_alternative<DecodeSuccess>(result)) {
                REQUIRE(std::get<DecodeSuccess>(result).message == msg);
                REQUIRE_FALSE(in_quartic);
                ++successes;
            } else {
                REQUIRE(in_quartic);
                ++failures;
            }
        }
    }
    CHECK(successes == 17 * 16);
    CHECK(failures == 4 * 16);
    CHECK(correctable_errors(code.profile(), dec.radius()) == 0);
}

TEST_CASE("every error pattern within the guaranteed radius is corrected") {
    struct Case {
        std::uint32_t p;
        unsigned e;
        std::map<unsigned, std::size_t> counts;
        std::size_t g;
    };
    for (const auto& c : {Case{2, 1, {{1, 2}, {2, 1}, {3, 2}, {4, 3}}, 4}, Case{3, 1, {{1, 3}, {2, 3}, {3, 8}}, 6},
                          Case{2, 2, {{1, 4}, {2, 6}, {3, 10}}, 10}, Case{2, 3, {{1, 8}, {2, 20}}, 9}}) {
        const auto code = counts_code(c.p, c.e, c.counts, c.g);
        const Decoder dec(code);
        const std::size_t tc = correctable_errors(code.profile(), dec.radius());
        CAPTURE(code.profile().to_string());
        REQUIRE(tc > 0);
        for (std::size_t w = 0; w <= tc; ++w) {
            SimulationConfig cfg;
            cfg.error_weight = w;
            cfg.trials = 100;
            cfg.seed = 99 + w;
            const auto report = simulate(dec, cfg, "unit");
            REQUIRE(report.successes == report.trials);
        }
    }
}

TEST_CASE("decode rejects words of the wrong length") {
    const auto code = counts_code(2, 1, {{1, 2}, {2, 1}}, 1);
    const Decoder dec(code);
    CHECK_THROWS_AS(dec.decode(Word(3, BaseElem{0})), std::invalid_argument);
    CHECK_THROWS_AS(dec.rs_decode(LiftedWord{std::vector<ExtElem>(5)}), std::invalid_argument);
}
