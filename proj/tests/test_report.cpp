#include <gtest/gtest.h>

#include <bit>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cfo/report.hpp"

namespace {

using cfo::ReferenceRow;
using cfo::ReportRow;
using cfo::Verdict;

ReportRow sample_row() {
    ReportRow r;
    r.function_id = "F10";
    r.n_dims = 30;
    r.known_fmax = 0.0;
    r.cfo_best_fitness = -4.440892098500626e-16;  // awkward low-order bits on purpose
    r.n_eval = 518820;
    r.best_probes_per_dim = 6;
    r.best_gamma = 0.7000000000000001;
    r.last_step_best_run = 481;
    r.wall_time_seconds = 1.2345;
    return r;
}

TEST(ReportSerialization, RoundTripIsExact) {
    std::vector<ReportRow> rows;
    rows.push_back(sample_row());
    ReportRow second = sample_row();
    second.function_id = "F1";
    second.cfo_best_fitness = 0.1 + 0.2;  // 0.30000000000000004
    second.wall_time_seconds = 0.0;
    rows.push_back(second);

    const std::string text = cfo::serialize_report(rows);
    const std::vector<ReportRow> parsed = cfo::parse_report(text);
    ASSERT_EQ(parsed.size(), rows.size());
    EXPECT_EQ(parsed[0], rows[0]);
    EXPECT_EQ(parsed[1], rows[1]);
    // The serialized doubles must round-trip bit for bit.
    EXPECT_EQ(std::bit_cast<std::uint64_t>(parsed[0].cfo_best_fitness),
              std::bit_cast<std::uint64_t>(rows[0].cfo_best_fitness));
    EXPECT_EQ(std::bit_cast<std::uint64_t>(parsed[1].cfo_best_fitness),
              std::bit_cast<std::uint64_t>(rows[1].cfo_best_fitness));

    // Stable layout: a top-level array, two-space indent, trailing newline.
    EXPECT_EQ(text.front(), '[');
    EXPECT_EQ(text.back(), '\n');
    EXPECT_NE(text.find("  {\n    \"function_id\": \"F10\","), std::string::npos);
}

TEST(ReportSerialization, ParseRejectsMalformedDocuments) {
    EXPECT_THROW(cfo::parse_report("not json at all"), std::runtime_error);
    EXPECT_THROW(cfo::parse_report("{\"a\": 1}"), std::runtime_error);  // not an array
    EXPECT_THROW(cfo::parse_report("[{\"function_id\": \"F1\"}]"), std::runtime_error);
    EXPECT_THROW(cfo::parse_report(
                     "[{\"function_id\": \"F1\", \"n_dims\": \"thirty\"}]"),
                 std::runtime_error);
}

TEST(ReportSerialization, CanonicalBytesZeroOnlyTheTimingField) {
    std::vector<ReportRow> a{sample_row()};
    std::vector<ReportRow> b{sample_row()};
    b[0].wall_time_seconds = 99.75;

    const std::string ca = cfo::canonical_report_bytes(cfo::serialize_report(a));
    const std::string cb = cfo::canonical_report_bytes(cfo::serialize_report(b));
    EXPECT_EQ(ca, cb);
    EXPECT_NE(ca.find("\"wall_time_seconds\": 0.0"), std::string::npos);

    b[0].cfo_best_fitness = -1.0;  // a real difference must survive
    EXPECT_NE(ca, cfo::canonical_report_bytes(cfo::serialize_report(b)));
}

TEST(ReferenceTable, BundledFileParsesWithAllTwentyThreeRows) {
    std::ifstream in(REFERENCE_RESULTS_PATH);
    ASSERT_TRUE(in.good()) << "missing " << REFERENCE_RESULTS_PATH;
    std::stringstream buf;
    buf << in.rdbuf();
    const std::vector<ReferenceRow> rows = cfo::parse_reference(buf.str());
    ASSERT_EQ(rows.size(), 23u);

    std::set<std::string> ids;
    for (const auto& r : rows) {
        ids.insert(r.function_id);
        EXPECT_GT(r.published_n_eval, 0);
    }
    EXPECT_EQ(ids.size(), 23u);

    // Spot values from the published table.
    for (const auto& r : rows) {
        if (r.function_id == "F1") {
            EXPECT_EQ(r.published_best_fitness, 0.0);
            EXPECT_EQ(r.published_n_eval, 222960);
        } else if (r.function_id == "F8") {
            EXPECT_EQ(r.published_best_fitness, 12569.4865);
            EXPECT_EQ(r.published_n_eval, 415500);
        } else if (r.function_id == "F10") {
            EXPECT_EQ(r.published_best_fitness, 4.7705e-18);
        } else if (r.function_id == "F16") {
            EXPECT_EQ(r.published_best_fitness, 1.03158);
        } else if (r.function_id == "F23") {
            EXPECT_EQ(r.published_best_fitness, 10.5364);
            EXPECT_EQ(r.published_n_eval, 304312);
        }
    }
}

ReferenceRow ref(const std::string& id, double fitness, std::int64_t n_eval) {
    ReferenceRow r;
    r.function_id = id;
    r.published_best_fitness = fitness;
    r.published_n_eval = n_eval;
    return r;
}

ReportRow row(const std::string& id, double fitness, std::int64_t n_eval) {
    ReportRow r;
    r.function_id = id;
    r.cfo_best_fitness = fitness;
    r.n_eval = n_eval;
    return r;
}

TEST(RowComparison, ExactZeroBand) {
    const ReferenceRow r1 = ref("F1", 0.0, 222960);
    auto c = cfo::compare_row(row("F1", 0.0, 222960), r1);
    EXPECT_EQ(c.fitness_verdict, Verdict::Pass);
    EXPECT_EQ(c.n_eval_verdict, Verdict::Pass);
    EXPECT_TRUE(c.acceptable());

    c = cfo::compare_row(row("F1", -5e-10, 222960), r1);
    EXPECT_EQ(c.fitness_verdict, Verdict::Pass);  // inside |best| <= 1e-9

    c = cfo::compare_row(row("F1", -0.5, 222960), r1);
    EXPECT_EQ(c.fitness_verdict, Verdict::Fail);
    EXPECT_FALSE(c.acceptable());
}

TEST(RowComparison, EvaluationCountBandIsTenPercentInclusive) {
    const ReferenceRow r1 = ref("F1", 0.0, 222960);
    EXPECT_EQ(cfo::compare_row(row("F1", 0.0, 245256), r1).n_eval_verdict,
              Verdict::Pass);  // exactly +10%
    EXPECT_EQ(cfo::compare_row(row("F1", 0.0, 245257), r1).n_eval_verdict, Verdict::Fail);
    EXPECT_EQ(cfo::compare_row(row("F1", 0.0, 200664), r1).n_eval_verdict,
              Verdict::Pass);  // exactly -10%
    EXPECT_EQ(cfo::compare_row(row("F1", 0.0, 200663), r1).n_eval_verdict, Verdict::Fail);
}

TEST(RowComparison, AbsoluteBand) {
    const ReferenceRow r8 = ref("F8", 12569.4865, 415500);
    EXPECT_EQ(cfo::compare_row(row("F8", 12569.0, 415500), r8).fitness_verdict, Verdict::Pass);
    EXPECT_EQ(cfo::compare_row(row("F8", 12568.9, 415500), r8).fitness_verdict, Verdict::Fail);

    const ReferenceRow r18 = ref("F18", -3.0, 100996);
    EXPECT_EQ(cfo::compare_row(row("F18", -3.0009, 100996), r18).fitness_verdict, Verdict::Pass);
    EXPECT_EQ(cfo::compare_row(row("F18", -3.002, 100996), r18).fitness_verdict, Verdict::Fail);
}

TEST(RowComparison, SmallMagnitudeFloorBand) {
    const ReferenceRow r15 = ref("F15", -5.6967e-4, 143152);
    EXPECT_EQ(cfo::compare_row(row("F15", -3.074e-3, 143152), r15).fitness_verdict,
              Verdict::Pass);  // above the -10x floor
    EXPECT_EQ(cfo::compare_row(row("F15", -6e-3, 143152), r15).fitness_verdict, Verdict::Fail);
    // A better-than-published value is always acceptable.
    EXPECT_EQ(cfo::compare_row(row("F15", -1e-7, 143152), r15).fitness_verdict, Verdict::Pass);
}

TEST(RowComparison, NoisyRowIsInformationalOnly) {
    const ReferenceRow r7 = ref("F7", -1.2919e-4, 399960);
    const auto c = cfo::compare_row(row("F7", -123.0, 1), r7);
    EXPECT_EQ(c.fitness_verdict, Verdict::Informational);
    EXPECT_EQ(c.n_eval_verdict, Verdict::Informational);
    EXPECT_TRUE(c.acceptable());
}

TEST(RowComparison, UnknownIdThrows) {
    EXPECT_THROW(cfo::compare_row(row("F99", 0.0, 1), ref("F99", 0.0, 1)), std::runtime_error);
}

TEST(ReportComparison, MatchesRowsByIdAndFlagsMissingReference) {
    std::vector<ReportRow> report{row("F1", 0.0, 222960), row("F8", 12569.4, 415500)};
    std::vector<ReferenceRow> reference{ref("F8", 12569.4865, 415500), ref("F1", 0.0, 222960)};
    const auto out = cfo::compare_report(report, reference);
    ASSERT_EQ(out.size(), 2u);
    EXPECT_EQ(out[0].function_id, "F1");
    EXPECT_EQ(out[1].function_id, "F8");
    EXPECT_TRUE(out[0].acceptable());
    EXPECT_TRUE(out[1].acceptable());

    report.push_back(row("F2", 0.0, 1));
    EXPECT_THROW(cfo::compare_report(report, reference), std::runtime_error);
}

TEST(Verdicts, StringsForDisplay) {
    EXPECT_STREQ(cfo::to_string(Verdict::Pass), "pass");
    EXPECT_STREQ(cfo::to_string(Verdict::Fail), "FAIL");
    EXPECT_STREQ(cfo::to_string(Verdict::Informational), "info");
}

}  // namespace
