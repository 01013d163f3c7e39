#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "boolnet/errors.hpp"

namespace boolnet {

class BitSequence {
public:
    BitSequence() = default;
    explicit BitSequence(std::vector<std::uint8_t> bits);  // entries must be 0 or 1

    // '0'/'1' characters; whitespace is tolerated and skipped.
    static BitSequence parse_ascii(std::string_view text);
    std::string to_ascii() const;

    std::size_t size() const { return bits_.size(); }
    int bit(std::size_t idx) const { return bits_[idx]; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }

private:
    std::vector<std::uint8_t> bits_;
};

enum class TestId {
    Monobit,
    BlockFrequency,
    Runs,
    LongestRunOfOnes,
    CumulativeSums,
    Serial,
    ApproximateEntropy,
};

const char* to_string(TestId id);
TestId test_id_from_string(std::string_view name);  // std::invalid_argument on unknown
const std::vector<TestId>& all_tests();

struct TestParams {
    double alpha = 0.01;
    int block_length = 128;  // block frequency M
    int serial_m = 2;
    int entropy_m = 2;
};

struct TestReport {
    std::string name;
    std::string params;
    std::vector<double> p_values;
    bool pass = false;         // all p-values >= alpha (when error is empty)
    std::string error;         // set when the sequence was too short
};

// Runs one test; InsufficientDataError when the sequence is shorter than the
// test's minimum.
TestReport run_test(const BitSequence& bits, TestId which, const TestParams& params = {});

// Runs the whole battery; per-test data shortages become failed reports with
// the error field set instead of exceptions.
std::vector<TestReport> run_battery(const BitSequence& bits, double alpha = 0.01);
std::vector<TestReport> run_battery(const BitSequence& bits, const TestParams& params);

// ASCII '0'/'1' file with no separators, suitable as file input for external
// statistical suites.
void export_bitstream(const BitSequence& bits, const std::string& path);

// Upper-tail chi-square p-value of observed symbol counts against the
// uniform expectation.
double chi_square_uniform_pvalue(const std::vector<std::uint64_t>& counts);

// CSV rows "test,params,p_values,pass" (p-values ';'-joined), with header.
std::string reports_csv(const std::vector<TestReport>& reports);

}  // namespace boolnet
