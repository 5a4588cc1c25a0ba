#include <gtest/gtest.h>

#include <cmath>

#include "qcasino/bitseq.hpp"

namespace qc = qcasino;

TEST(BitString, Validation) {
  EXPECT_TRUE(qc::is_bit_string(""));
  EXPECT_TRUE(qc::is_bit_string("0101"));
  EXPECT_FALSE(qc::is_bit_string("01a1"));
  EXPECT_THROW(qc::require_bit_string("012"), qc::shape_error);
  EXPECT_NO_THROW(qc::require_bit_string("110"));
}

TEST(BitString, Counts) {
  EXPECT_EQ(qc::count_ones("110100"), 3);
  EXPECT_EQ(qc::count_zeros("110100"), 3);
  EXPECT_EQ(qc::count_ones(""), 0);
}

TEST(FrequencyStats, RunningFrequency) {
  qc::FrequencyStats st = qc::frequency_stats("1101");
  EXPECT_EQ(st.n, 4);
  EXPECT_EQ(st.count_ones, 3);
  EXPECT_DOUBLE_EQ(st.relative_frequency(), 0.75);
  EXPECT_TRUE(std::isnan(qc::FrequencyStats{}.relative_frequency()));
}

TEST(Champernowne, GoldenPrefix) {
  EXPECT_EQ(qc::champernowne_prefix(1), "0");
  EXPECT_EQ(qc::champernowne_prefix(2), "01");
  EXPECT_EQ(qc::champernowne_prefix(34), "0100011011000001010011100101110111");
  EXPECT_THROW(qc::champernowne_prefix(0), qc::precondition_error);
}

TEST(Champernowne, SourceAgreesWithPrefix) {
  const qc::BitString expected = qc::champernowne_prefix(500);
  qc::BitSource src = qc::champernowne_source();
  qc::BitString got;
  for (int i = 0; i < 500; ++i) got.push_back(src.next());
  EXPECT_EQ(got, expected);
}

TEST(CylinderProbability, ExactPowerOfTwo) {
  EXPECT_DOUBLE_EQ(qc::cylinder_probability("").value(), 1.0);
  EXPECT_DOUBLE_EQ(qc::cylinder_probability("0").value(), 0.5);
  EXPECT_DOUBLE_EQ(qc::cylinder_probability("0100").value(), 0.0625);
  EXPECT_EQ(qc::cylinder_probability("010011").log2_denominator, 6);
  EXPECT_THROW(qc::cylinder_probability("01x"), qc::shape_error);
}

TEST(RecurrenceCount, BalancedPrefixHits) {
  EXPECT_EQ(qc::recurrence_count(""), 0);
  EXPECT_EQ(qc::recurrence_count("01"), 1);
  EXPECT_EQ(qc::recurrence_count("0110"), 2);
  EXPECT_EQ(qc::recurrence_count("0101"), 2);
  EXPECT_EQ(qc::recurrence_count("1111"), 0);
}

TEST(BitSource, ConstantAndPeriodic) {
  qc::BitSource ones = qc::constant_source('1');
  for (int i = 0; i < 5; ++i) EXPECT_EQ(ones.next(), '1');
  EXPECT_THROW(qc::constant_source('x'), qc::shape_error);

  qc::BitSource alt = qc::periodic_source("01");
  qc::BitString got;
  for (int i = 0; i < 6; ++i) got.push_back(alt.next());
  EXPECT_EQ(got, "010101");
  EXPECT_THROW(qc::periodic_source(""), qc::precondition_error);
  EXPECT_THROW(qc::periodic_source("02"), qc::shape_error);
}

TEST(BitSource, FixedResultsExhaustion) {
  qc::BitSource src = qc::fixed_results_source("10");
  EXPECT_EQ(src.next(), '1');
  EXPECT_EQ(src.next(), '0');
  EXPECT_THROW(src.next(), qc::precondition_error);
}
