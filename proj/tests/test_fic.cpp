#include <gtest/gtest.h>

#include <random>

#include "altcodes/fic.hpp"
#include "altcodes/generate.hpp"

using namespace altcodes;

namespace {

const FiniteLanguage fic1{"aaa", "aab", "baa", "bbbbbbbbb"};
const FiniteLanguage fic2{"abaa",   "abab",    "abbaa",   "abbab", "abbbaa", "abbbab",
                          "abbbbaa", "abbbbab", "bbaaa", "bbaab", "bbabaa", "bbabab"};
const FiniteLanguage gcd_example{"abc", "acb", "bac", "bca", "bbac", "cab", "cba", "caab"};

TEST(StandardForm, Classification) {
    EXPECT_EQ(classify_standard_form(fic1).kind, StandardFormKind::Standard);
    const StandardForm f = classify_standard_form(FiniteLanguage{"abb", "abbab"});
    EXPECT_EQ(f.kind, StandardFormKind::CommonFirst);
    EXPECT_EQ(f.letter, 'a');
    EXPECT_EQ(classify_standard_form(FiniteLanguage{"a", "ab"}).kind, StandardFormKind::HasLength1);
    EXPECT_EQ(classify_standard_form(FiniteLanguage{"aa"}).kind, StandardFormKind::OneLetterAlphabet);
    const StandardForm last = classify_standard_form(FiniteLanguage{"ab", "bab"});
    EXPECT_EQ(last.kind, StandardFormKind::CommonLast);
    EXPECT_EQ(last.letter, 'b');
}

TEST(GcdPretest, WorkedExamples) {
    const GcdPretest r = gcd_pretest(gcd_example);
    EXPECT_TRUE(r.reject);
    EXPECT_EQ(r.gcd, 1u);

    const GcdPretest a = gcd_pretest(fic1);
    EXPECT_FALSE(a.reject);
    EXPECT_EQ(a.d_set, (std::vector<std::size_t>{2}));

    const GcdPretest b = gcd_pretest(fic2);
    EXPECT_EQ(b.d_set, (std::vector<std::size_t>{2, 4}));
}

TEST(GcdPretest, Divisors) {
    EXPECT_EQ(divisors(12), (std::vector<std::size_t>{1, 2, 3, 4, 6, 12}));
    EXPECT_EQ(divisors(12, 2), (std::vector<std::size_t>{2, 3, 4, 6, 12}));
    EXPECT_TRUE(is_prime(13));
    EXPECT_FALSE(is_prime(1));
    EXPECT_FALSE(is_prime(9));
}

TEST(FicSearch, ExampleOneExhausts) {
    const FicResult r = fic_search(fic1, {2}, {{}, true});
    EXPECT_FALSE(r.decomposition);
    EXPECT_EQ(r.state.w, "aaa");
    EXPECT_EQ(r.state.t, 'a');
    EXPECT_EQ(r.state.p_w, (std::vector<Word>{"a", "aa"}));
    ASSERT_EQ(r.state.steps.size(), 2u);
    EXPECT_EQ(r.state.steps[0].u, "a");
    EXPECT_EQ(r.state.steps[0].s, (FiniteLanguage{"aa", "ab"}));
    EXPECT_EQ(r.state.steps[1].u, "aa");
    EXPECT_EQ(r.state.steps[1].s, (FiniteLanguage{"a", "b"}));
}

TEST(FicSearch, ExampleTwoFindsWorkedPair) {
    const FicResult r = fic_search(fic2, {2, 4}, {{}, true});
    ASSERT_TRUE(r.decomposition);
    EXPECT_EQ(r.decomposition->x, (FiniteLanguage{"ab", "abbb", "bba"}));
    EXPECT_EQ(r.decomposition->y, (FiniteLanguage{"aa", "ab", "baa", "bab"}));
    EXPECT_EQ(r.state.p_w, (std::vector<Word>{"a", "ab", "aba"}));
}

TEST(FicSearch, CandidateInvariants) {
    const FicResult r = fic_search(fic2, {2, 4}, {{}, true});
    const FiniteLanguage zt = partition_by_first_letter(fic2).block(r.state.t);
    for (const auto& step : r.state.steps) {
        EXPECT_FALSE(step.u.empty());
        EXPECT_LT(step.u.size(), r.state.w.size());
        EXPECT_TRUE(r.state.w.starts_with(step.u));
        EXPECT_EQ(step.s, left_quotient(step.u, zt));
        for (const auto& c : step.candidates) {
            EXPECT_TRUE(is_subset(c.y, step.s));
            EXPECT_TRUE(c.y.size() == 2 || c.y.size() == 4);
            FiniteLanguage pool = right_quotient(fic2, *c.y.begin());
            for (const auto& y : c.y) pool = intersect(pool, right_quotient(fic2, y));
            EXPECT_EQ(c.p, without_empty_word(pool));
        }
    }
}

TEST(FicSearch, ProductOfPrefixCodes) {
    const FiniteLanguage z = product(FiniteLanguage{"aa", "ab", "ba", "bb"}, FiniteLanguage{"a", "b"});
    const DecisionReport r = decide_alt_induced(z);
    EXPECT_EQ(r.verdict, Verdict::AltInduced);
    ASSERT_TRUE(r.decomposition);
    EXPECT_TRUE(is_valid_decomposition(*r.decomposition, z));
}

TEST(FicSearch, Preconditions) {
    EXPECT_THROW(fic_search(FiniteLanguage{"abb", "abbab"}, {2}), contract_violation);
    EXPECT_THROW(fic_search(fic1, {}), contract_violation);
}

TEST(Decide, Routes) {
    const DecisionReport a = decide_alt_induced(FiniteLanguage{"abb", "abbab"});
    EXPECT_EQ(a.verdict, Verdict::AltInduced);
    EXPECT_EQ(a.route, Route::CommonFirstLetter);
    EXPECT_EQ(a.decomposition->x, (FiniteLanguage{"a"}));
    EXPECT_EQ(a.decomposition->y, (FiniteLanguage{"bb", "bbab"}));

    const DecisionReport b = decide_alt_induced(FiniteLanguage{"a", "ab"});
    EXPECT_EQ(b.verdict, Verdict::NotAltInduced);
    EXPECT_EQ(b.route, Route::Length1Reject);

    const DecisionReport c = decide_alt_induced(fic1);
    EXPECT_EQ(c.verdict, Verdict::NotAltInduced);
    EXPECT_EQ(c.route, Route::FicExhausted);

    const DecisionReport d = decide_alt_induced(gcd_example);
    EXPECT_EQ(d.route, Route::GcdReject);
    ASSERT_TRUE(d.gcd);
    EXPECT_EQ(d.gcd->gcd, 1u);

    const DecisionReport e = decide_alt_induced(FiniteLanguage{"ab", "bb", "bab"});
    EXPECT_EQ(e.route, Route::CommonLastLetter);
    EXPECT_EQ(e.decomposition->y, (FiniteLanguage{"b"}));

    const DecisionReport f = decide_alt_induced(FiniteLanguage{"aa"});
    EXPECT_EQ(f.route, Route::OneLetterAlphabet);
    EXPECT_EQ(f.decomposition->x, (FiniteLanguage{"a"}));

    // Standard form, three words, blocks of 1 and 2.
    const DecisionReport g = decide_alt_induced(FiniteLanguage{"ab", "ba", "bba"});
    EXPECT_EQ(g.route, Route::PrimeReject);
}

TEST(Decide, RejectsNonCodes) {
    const FiniteLanguage z{"aaaa", "aaaab", "baaaa", "baaaab"};
    try {
        decide_alt_induced(z);
        FAIL() << "expected not_a_code";
    } catch (const not_a_code& e) {
        EXPECT_TRUE(is_valid_witness(e.witness(), z));
    }
    EXPECT_THROW(decide_alt_induced(FiniteLanguage{}), contract_violation);
}

TEST(Decide, BudgetIsExplicit) {
    SearchBudget tiny;
    tiny.max_candidates = 5;
    EXPECT_THROW(decide_alt_induced(fic2, {tiny, false}), budget_exceeded);
}

TEST(Decide, Deterministic) {
    const DecisionReport a = decide_alt_induced(fic2);
    const DecisionReport b = decide_alt_induced(fic2);
    EXPECT_EQ(a.decomposition->x, b.decomposition->x);
    EXPECT_EQ(a.decomposition->y, b.decomposition->y);
    EXPECT_EQ(a.search_stats.candidates(), b.search_stats.candidates());
}

TEST(Enumerate, Examples) {
    const auto all = enumerate_decompositions(FiniteLanguage{"abb", "abbab"});
    ASSERT_EQ(all.size(), 3u);
    EXPECT_EQ(all[0].x, (FiniteLanguage{"a"}));
    EXPECT_EQ(all[0].y, (FiniteLanguage{"bb", "bbab"}));
    EXPECT_EQ(all[1].x, (FiniteLanguage{"ab"}));
    EXPECT_EQ(all[1].y, (FiniteLanguage{"b", "bab"}));
    EXPECT_EQ(all[2].x, (FiniteLanguage{"ab", "abba"}));
    EXPECT_EQ(all[2].y, (FiniteLanguage{"b"}));

    EXPECT_TRUE(enumerate_decompositions(fic1).empty());
    const auto aa = enumerate_decompositions(FiniteLanguage{"aa"});
    ASSERT_EQ(aa.size(), 1u);
    EXPECT_EQ(aa[0].x, (FiniteLanguage{"a"}));
}

TEST(Enumerate, Strong) {
    const auto s = enumerate_strong_decompositions(FiniteLanguage{"abb", "abbab"});
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(s[0].x, (FiniteLanguage{"a"}));
    EXPECT_EQ(s[0].y, (FiniteLanguage{"bb", "bbab"}));
    EXPECT_EQ(enumerate_strong_decompositions(FiniteLanguage{"aa"}).size(), 1u);
    EXPECT_TRUE(enumerate_strong_decompositions(fic1).empty());
}

TEST(Enumerate, Preconditions) {
    EXPECT_THROW(enumerate_decompositions(FiniteLanguage{"a", "bb"}), contract_violation);
    EXPECT_THROW(enumerate_decompositions(FiniteLanguage{"aa", "aaaa"}), not_a_code);
}

TEST(DecideProperties, SoundnessDualityAndPrimeSizes) {
    std::mt19937_64 rng(21);
    const Alphabet ab{'a', 'b'}, abc{'a', 'b', 'c'};
    for (int trial = 0; trial < 300; ++trial) {
        const Alphabet& alphabet = trial % 3 == 0 ? abc : ab;
        FiniteLanguage z = trial % 2 == 0 ? random_alt_induced(rng, alphabet, 2 + uniform_below(rng, 5), 5).language
                                          : random_code(rng, alphabet, 2 + uniform_below(rng, 5), 4);
        const DecisionReport r = decide_alt_induced(z);
        if (r.verdict == Verdict::AltInduced) {
            ASSERT_TRUE(r.decomposition);
            EXPECT_TRUE(is_valid_decomposition(*r.decomposition, z));
            EXPECT_TRUE(check_alternative(r.decomposition->x, r.decomposition->y).is_alternative);
        }
        if (r.route == Route::CommonFirstLetter) {
            EXPECT_TRUE(check_alternative(r.decomposition->x, r.decomposition->y).is_alternative);
        }
        if (r.form.kind == StandardFormKind::Standard && is_prime(z.size())) {
            EXPECT_TRUE(r.gcd->reject);
        }
        if (r.route == Route::GcdReject || r.route == Route::PrimeReject) {
            EXPECT_TRUE(enumerate_decompositions(z).empty());
        }
        EXPECT_EQ(decide_alt_induced(reverse(z)).verdict, r.verdict) << z;
    }
}

}  // namespace
