#include <gtest/gtest.h>

#include <regex>
#include <sstream>

#include "emolex/evalkit/records.hpp"
#include "emolex/evalkit/reports.hpp"
#include "emolex/evalkit/sampling.hpp"
#include "emolex/evalkit/summary.hpp"
#include "emolex/lexicon/lexicon.hpp"
#include "emolex/util/error.hpp"
#include "emolex/util/rng.hpp"
#include "test_support.hpp"

namespace emolex::evalkit {
namespace {

using lexicon::LexiconEntry;

SubclassCounts counts(std::initializer_list<std::pair<Subclass, std::uint32_t>> values) {
  SubclassCounts c{};
  for (const auto& [s, n] : values) c[slot(s)] = n;
  return c;
}

// Re-parses every "<p>%" in a rendered summary and returns the total in hundredths.
long percent_total(const std::string& summary) {
  static const std::regex pct(R"(([0-9]+)\.([0-9]+)%)");
  long sum = 0;
  for (auto it = std::sregex_iterator(summary.begin(), summary.end(), pct); it != std::sregex_iterator(); ++it) {
    auto frac = (*it)[2].str();
    if (frac.size() == 1) frac += "0";
    sum += std::stol((*it)[1].str()) * 100 + std::stol(frac);
  }
  return sum;
}

TEST(Summary, VerbatimExample) {
  const std::vector<std::string> terms{"inequality", "inequity"};
  EXPECT_EQ(render_summary(terms, counts({{Subclass::sadness, 3}, {Subclass::disgust, 2}, {Subclass::anger, 1}})),
            "The term group \"inequality inequity\" received annotations as 50.0% sadness, 33.33% disgust, "
            "16.67% anger.");
}

TEST(Summary, SingleSubclassAndTie) {
  const std::vector<std::string> terms{"happy"};
  EXPECT_EQ(render_summary(terms, counts({{Subclass::joy, 2}})),
            "The term group \"happy\" received annotations as 100.0% joy.");
  EXPECT_EQ(render_summary(terms, counts({{Subclass::fear, 1}, {Subclass::joy, 1}})),
            "The term group \"happy\" received annotations as 50.0% joy, 50.0% fear.");
  EXPECT_THROW(render_summary(terms, SubclassCounts{}), InvalidArgumentError);
}

TEST(Summary, FormatPercentage) {
  EXPECT_EQ(format_percentage(5000), "50.0");
  EXPECT_EQ(format_percentage(3333), "33.33");
  EXPECT_EQ(format_percentage(10000), "100.0");
  EXPECT_EQ(format_percentage(1250), "12.5");
  EXPECT_EQ(format_percentage(5), "0.05");
}

TEST(Summary, SevenWayTieStillSumsToHundred) {
  SubclassCounts c{};
  for (std::size_t i = 0; i < 7; ++i) c[i] = 1;
  const auto shares = summary_shares(c);
  std::uint32_t sum = 0;
  for (const auto& s : shares) {
    sum += s.hundredths;
    EXPECT_TRUE(s.hundredths == 1428 || s.hundredths == 1429);
  }
  EXPECT_EQ(sum, 10000u);
}

TEST(Summary, RandomCountsParseBackToHundred) {
  auto rng = seeded_rng(41, "summary");
  const std::vector<std::string> terms{"t"};
  for (int trial = 0; trial < 2000; ++trial) {
    SubclassCounts c{};
    for (auto& v : c) v = uniform_below(rng, 3) == 0 ? static_cast<std::uint32_t>(uniform_below(rng, 50)) : 0;
    if (total(c) == 0) c[0] = 1;
    const auto text = render_summary(terms, c);
    EXPECT_LE(std::abs(percent_total(text) - 10000), 2) << text;
    const auto shares = summary_shares(c);
    for (std::size_t i = 1; i < shares.size(); ++i) EXPECT_GE(shares[i - 1].hundredths, shares[i].hundredths);
  }
}

std::vector<LexiconEntry> stratified_entries(std::size_t per_total) {
  const auto groups = test::synthetic_groups(per_total * 6);
  std::vector<LexiconEntry> out;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const auto t = static_cast<std::uint32_t>(1 + i % 6);
    out.push_back(lexicon::make_entry(groups[i], counts({{Subclass::joy, t}})));
  }
  return out;
}

TEST(Sampling, ValiditySetPerStratumAndSeeded) {
  const auto entries = stratified_entries(12);
  const auto a = sample_validity_set(entries, 5, 10);
  ASSERT_EQ(a.size(), 50u);
  EXPECT_EQ(a, sample_validity_set(entries, 5, 10));
  EXPECT_NE(a, sample_validity_set(entries, 6, 10));
  std::set<std::string> unique(a.begin(), a.end());
  EXPECT_EQ(unique.size(), 50u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& e = *std::find_if(entries.begin(), entries.end(), [&](const auto& x) { return x.group_id == a[i]; });
    EXPECT_EQ(e.total, 2 + i / 10);
  }
}

TEST(Sampling, ShortStratumNamesItself) {
  const auto entries = stratified_entries(12);
  try {
    sample_validity_set(entries, 5, 13);
    FAIL();
  } catch (const InsufficientDataError& e) {
    EXPECT_NE(std::string(e.what()).find("stratum 2"), std::string::npos);
  }
}

TEST(Sampling, IntensifierSetAndTasks) {
  const auto groups = test::synthetic_groups(4);
  const std::vector<LexiconEntry> entries{
      lexicon::make_entry(groups[0], counts({{Subclass::joy, 2}})),
      lexicon::make_entry(groups[1], counts({{Subclass::amplifying, 1}, {Subclass::joy, 3}})),
      lexicon::make_entry(groups[2], counts({{Subclass::weakening, 2}})),
      lexicon::make_entry(groups[3], counts({{Subclass::none, 2}})),
  };
  const auto ids = sample_intensifier_set(entries);
  EXPECT_EQ(ids, (std::vector<std::string>{"g0001", "g0002"}));
  EXPECT_TRUE(sample_intensifier_set(std::span(entries).first(1)).empty());
  const auto tasks = make_evaluation_tasks(entries, ids, EvaluationKind::intensifier);
  ASSERT_EQ(tasks.size(), 2u);
  EXPECT_EQ(tasks[1].summary, "The term group \"g0002\" received annotations as 100.0% weakening.");
  const std::vector<std::string> bad{"nope"};
  EXPECT_THROW(make_evaluation_tasks(entries, bad, EvaluationKind::validity), NotFoundError);
}

EvaluationRecord validity(const std::string& group, const std::string& who, EvaluatorKind kind, int score) {
  return {group, who, kind, EvaluationKind::validity, score, std::nullopt};
}
EvaluationRecord intens(const std::string& group, const std::string& who, EvaluatorKind kind, bool ok) {
  return {group, who, kind, EvaluationKind::intensifier, std::nullopt, ok};
}

TEST(Records, ValidateAndRoundTrip) {
  const auto r = validity("g", "e1", EvaluatorKind::expert, 4);
  EXPECT_EQ(parse_record(serialize_record(r)), r);
  EXPECT_THROW(validate(validity("g", "e", EvaluatorKind::expert, 6)), InvalidArgumentError);
  EXPECT_THROW(validate({"g", "e", EvaluatorKind::crowd, EvaluationKind::intensifier, 3, std::nullopt}),
               InvalidArgumentError);
  EvaluationLog log;
  log.record(r);
  EXPECT_THROW(log.record(r), ConflictError);
}

TEST(ValidityReport, FacetBuckets) {
  const auto g = test::synthetic_groups(1)[0];
  const auto e = lexicon::make_entry(g, counts({{Subclass::joy, 2}, {Subclass::fear, 1}}));
  EXPECT_EQ(facet_bucket(e, Facet::count), "2");
  EXPECT_EQ(facet_bucket(e, Facet::percent), "67");
  EXPECT_EQ(facet_bucket(e, Facet::subclass), "joy");
  EXPECT_EQ(facet_bucket(e, Facet::agreement), "1");
  const auto tie = lexicon::make_entry(g, counts({{Subclass::joy, 1}, {Subclass::fear, 1}}));
  EXPECT_EQ(facet_bucket(tie, Facet::subclass), "agreement");
  EXPECT_EQ(facet_bucket(tie, Facet::agreement), "2");
  EXPECT_EQ(facet_bucket(tie, Facet::percent), "50");
}

TEST(ValidityReport, AllFivesAndSingleRecord) {
  const auto entries = stratified_entries(2);
  std::vector<EvaluationRecord> records;
  for (const auto& e : entries) records.push_back(validity(e.group_id, "c1", EvaluatorKind::crowd, 5));
  for (const auto& row : validity_report(records, entries)) EXPECT_DOUBLE_EQ(row.mean, 5.0);

  const std::vector<EvaluationRecord> one{validity(entries[0].group_id, "e1", EvaluatorKind::expert, 3)};
  const auto rows = validity_report(one, entries, Facet::subclass);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].bucket, "joy");
  EXPECT_EQ(rows[0].evaluator_kind, EvaluatorKind::expert);
  EXPECT_DOUBLE_EQ(rows[0].mean, 3.0);
}

TEST(ValidityReport, CountFacetRecoversConstructedScores) {
  const auto entries = stratified_entries(5);
  std::vector<EvaluationRecord> records;
  for (const auto& e : entries) {
    const int score = static_cast<int>(std::min<std::uint64_t>(5, e.agreement.max_count() + 1));
    records.push_back(validity(e.group_id, "e1", EvaluatorKind::expert, score));
    records.push_back(validity(e.group_id, "c1", EvaluatorKind::crowd, score));
  }
  const auto rows = validity_report(records, entries, Facet::count);
  ASSERT_EQ(rows.size(), 12u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto bucket = std::stoul(rows[i].bucket);
    EXPECT_EQ(bucket, 1 + i / 2);
    EXPECT_DOUBLE_EQ(rows[i].mean, static_cast<double>(std::min<std::size_t>(5, bucket + 1)));
    EXPECT_EQ(rows[i].n, 5u);
  }
  // strictly increasing until the clamp at 5
  for (std::size_t i = 2; i < 8; i += 2) EXPECT_LT(rows[i - 2].mean, rows[i].mean);
}

TEST(ValidityReport, Errors) {
  const auto entries = stratified_entries(1);
  EXPECT_THROW(validity_report(std::vector<EvaluationRecord>{}, entries), InvalidArgumentError);
  const std::vector<EvaluationRecord> unknown{validity("zz", "e", EvaluatorKind::expert, 3)};
  EXPECT_THROW(validity_report(unknown, entries), InvalidArgumentError);
}

TEST(IntensifierReport, Levels) {
  std::vector<EvaluationRecord> r;
  for (int i = 0; i < 4; ++i) r.push_back(intens("a", "c" + std::to_string(i), EvaluatorKind::crowd, i < 3));
  for (int i = 0; i < 4; ++i) r.push_back(intens("b", "c" + std::to_string(i), EvaluatorKind::crowd, true));
  r.push_back(intens("a", "e1", EvaluatorKind::expert, true));
  r.push_back(intens("a", "e2", EvaluatorKind::expert, false));
  const auto rows = intensifier_report(r);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0].level.population, EvaluatorKind::expert);
  EXPECT_DOUBLE_EQ(rows[0].fraction, 1.0);  // expert low
  EXPECT_DOUBLE_EQ(rows[1].fraction, 0.0);  // expert high
  EXPECT_DOUBLE_EQ(rows[2].fraction, 1.0);  // crowd low
  EXPECT_DOUBLE_EQ(rows[3].fraction, 1.0);  // crowd mid
  EXPECT_DOUBLE_EQ(rows[4].fraction, 0.5);  // crowd high
  EXPECT_EQ(rows[4].groups, 2u);
}

TEST(IntensifierReport, WrongMultiplicityListsEveryGroup) {
  std::vector<EvaluationRecord> r{intens("a", "c1", EvaluatorKind::crowd, true),
                                  intens("b", "e1", EvaluatorKind::expert, true)};
  try {
    intensifier_report(r);
    FAIL();
  } catch (const InvalidArgumentError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("a"), std::string::npos);
    EXPECT_NE(what.find("b"), std::string::npos);
  }
}

TEST(IntensifierReport, FractionsNonIncreasingOnRandomSets) {
  auto rng = seeded_rng(42, "intensifier");
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<EvaluationRecord> r;
    const auto groups = 1 + uniform_below(rng, 30);
    for (std::size_t g = 0; g < groups; ++g) {
      const auto id = "g" + std::to_string(g);
      for (int i = 0; i < 2; ++i) r.push_back(intens(id, "e" + std::to_string(i), EvaluatorKind::expert, uniform_below(rng, 2)));
      for (int i = 0; i < 4; ++i) r.push_back(intens(id, "c" + std::to_string(i), EvaluatorKind::crowd, uniform_below(rng, 2)));
    }
    const auto rows = intensifier_report(r);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      if (rows[i].level.population == rows[i - 1].level.population) EXPECT_GE(rows[i - 1].fraction, rows[i].fraction);
    }
  }
}

TEST(Reports, CsvColumns) {
  std::stringstream v, i;
  write_validity_report(v, std::vector<ValidityRow>{{Facet::count, "2", EvaluatorKind::crowd, 3.5, 4}});
  EXPECT_EQ(v.str(), "facet,bucket,evaluator_kind,mean_or_fraction,n\ncount,2,crowd,3.5000,4\n");
  write_intensifier_report(i, std::vector<IntensifierRow>{{{EvaluatorKind::expert, Level::high, 2}, 0.25, 8}});
  EXPECT_EQ(i.str(), "facet,bucket,evaluator_kind,mean_or_fraction,n\nintensifier,high,expert,0.2500,8\n");
}

}  // namespace
}  // namespace emolex::evalkit
