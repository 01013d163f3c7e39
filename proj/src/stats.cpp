#include "boolnet/stats.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "boolnet/special_functions.hpp"

namespace boolnet {

namespace {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void require_length(const BitSequence& bits, std::size_t minimum, const char* test) {
    if (bits.size() < minimum)
        throw InsufficientDataError(std::string(test) + " needs at least " +
                                    std::to_string(minimum) + " bits, got " +
                                    std::to_string(bits.size()));
}

TestReport make_report(TestId id, std::string params, std::vector<double> p_values,
                       double alpha) {
    TestReport report;
    report.name = to_string(id);
    report.params = std::move(params);
    report.p_values = std::move(p_values);
    report.pass = true;
    for (double p : report.p_values)
        if (!(p >= alpha)) report.pass = false;
    return report;
}

TestReport monobit(const BitSequence& bits, const TestParams& params) {
    require_length(bits, 100, "monobit");
    const std::size_t n = bits.size();
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < n; ++i) sum += 2 * bits.bit(i) - 1;
    const double s_obs = std::abs(static_cast<double>(sum)) / std::sqrt(static_cast<double>(n));
    const double p = std::erfc(s_obs / std::sqrt(2.0));
    return make_report(TestId::Monobit, "n=" + std::to_string(n), {p}, params.alpha);
}

TestReport block_frequency(const BitSequence& bits, const TestParams& params) {
    const int block = params.block_length;
    if (block < 1) throw std::invalid_argument("block length must be positive");
    require_length(bits, static_cast<std::size_t>(block), "block frequency");
    const std::size_t n = bits.size();
    const std::size_t blocks = n / static_cast<std::size_t>(block);
    double chi2 = 0.0;
    for (std::size_t b = 0; b < blocks; ++b) {
        std::int64_t ones = 0;
        for (int j = 0; j < block; ++j) ones += bits.bit(b * block + j);
        const double pi = static_cast<double>(ones) / block;
        chi2 += (pi - 0.5) * (pi - 0.5);
    }
    chi2 *= 4.0 * block;
    const double p = regularized_gamma_q(static_cast<double>(blocks) / 2.0, chi2 / 2.0);
    return make_report(TestId::BlockFrequency,
                       "n=" + std::to_string(n) + ",M=" + std::to_string(block), {p},
                       params.alpha);
}

TestReport runs(const BitSequence& bits, const TestParams& params) {
    require_length(bits, 100, "runs");
    const std::size_t n = bits.size();
    std::int64_t ones = 0;
    for (std::size_t i = 0; i < n; ++i) ones += bits.bit(i);
    const double pi = static_cast<double>(ones) / static_cast<double>(n);
    const double tau = 2.0 / std::sqrt(static_cast<double>(n));
    double p;
    if (std::abs(pi - 0.5) >= tau) {
        // The frequency precondition failed; the sequence is not random and
        // the test reports zero by convention.
        p = 0.0;
    } else {
        std::uint64_t v_obs = 1;
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (bits.bit(i) != bits.bit(i + 1)) ++v_obs;
        const double product = pi * (1.0 - pi);
        const double num = std::abs(static_cast<double>(v_obs) - 2.0 * n * product);
        p = std::erfc(num / (2.0 * std::sqrt(2.0 * n) * product));
    }
    return make_report(TestId::Runs, "n=" + std::to_string(n), {p}, params.alpha);
}

TestReport longest_run_of_ones(const BitSequence& bits, const TestParams& params) {
    require_length(bits, 128, "longest run of ones");
    const std::size_t n = bits.size();
    int block, k;
    std::vector<double> pi;
    std::vector<int> thresholds;  // class boundaries for the longest run
    if (n < 6272) {
        block = 8;
        k = 3;
        pi = {0.21484375, 0.3671875, 0.23046875, 0.1875};
        thresholds = {1, 2, 3};
    } else if (n < 750000) {
        block = 128;
        k = 5;
        pi = {0.1174035788, 0.242955959, 0.249363483, 0.17517706, 0.102701071, 0.112398847};
        thresholds = {4, 5, 6, 7, 8};
    } else {
        block = 10000;
        k = 6;
        pi = {0.0882, 0.2092, 0.2483, 0.1933, 0.1208, 0.0675, 0.0727};
        thresholds = {10, 11, 12, 13, 14, 15};
    }
    const std::size_t blocks = n / static_cast<std::size_t>(block);
    std::vector<std::uint64_t> nu(static_cast<std::size_t>(k) + 1, 0);
    for (std::size_t b = 0; b < blocks; ++b) {
        int longest = 0, run = 0;
        for (int j = 0; j < block; ++j) {
            run = bits.bit(b * block + j) ? run + 1 : 0;
            longest = std::max(longest, run);
        }
        std::size_t cls = static_cast<std::size_t>(k);
        for (std::size_t c = 0; c < thresholds.size(); ++c)
            if (longest <= thresholds[c]) {
                cls = c;
                break;
            }
        ++nu[cls];
    }
    double chi2 = 0.0;
    for (std::size_t c = 0; c <= static_cast<std::size_t>(k); ++c) {
        const double expected = static_cast<double>(blocks) * pi[c];
        const double d = static_cast<double>(nu[c]) - expected;
        chi2 += d * d / expected;
    }
    const double p = regularized_gamma_q(k / 2.0, chi2 / 2.0);
    return make_report(TestId::LongestRunOfOnes,
                       "n=" + std::to_string(n) + ",M=" + std::to_string(block), {p},
                       params.alpha);
}

double cusum_pvalue(std::size_t n, double z) {
    const double sqrt_n = std::sqrt(static_cast<double>(n));
    double sum1 = 0.0;
    {
        const int start = (static_cast<int>(-static_cast<double>(n) / z) + 1) / 4;
        const int finish = (static_cast<int>(static_cast<double>(n) / z) - 1) / 4;
        for (int k = start; k <= finish; ++k)
            sum1 += normal_cdf((4 * k + 1) * z / sqrt_n) - normal_cdf((4 * k - 1) * z / sqrt_n);
    }
    double sum2 = 0.0;
    {
        const int start = (static_cast<int>(-static_cast<double>(n) / z) - 3) / 4;
        const int finish = (static_cast<int>(static_cast<double>(n) / z) - 1) / 4;
        for (int k = start; k <= finish; ++k)
            sum2 += normal_cdf((4 * k + 3) * z / sqrt_n) - normal_cdf((4 * k + 1) * z / sqrt_n);
    }
    return 1.0 - sum1 + sum2;
}

TestReport cumulative_sums(const BitSequence& bits, const TestParams& params) {
    require_length(bits, 100, "cumulative sums");
    const std::size_t n = bits.size();
    std::vector<double> p_values;
    for (int mode = 0; mode < 2; ++mode) {
        std::int64_t sum = 0, peak = 1;
        for (std::size_t idx = 0; idx < n; ++idx) {
            const std::size_t i = mode == 0 ? idx : n - 1 - idx;
            sum += 2 * bits.bit(i) - 1;
            peak = std::max<std::int64_t>(peak, std::abs(sum));
        }
        p_values.push_back(cusum_pvalue(n, static_cast<double>(peak)));
    }
    return make_report(TestId::CumulativeSums, "n=" + std::to_string(n),
                       std::move(p_values), params.alpha);
}

// Sum over all overlapping m-bit windows (with wraparound) of count^2,
// scaled: psi2 = (2^m / n) * sum - n. psi2(0) = psi2(-1) = 0.
double psi_squared(const BitSequence& bits, int m) {
    if (m <= 0) return 0.0;
    const std::size_t n = bits.size();
    std::vector<std::uint64_t> counts(std::size_t{1} << m, 0);
    std::uint32_t window = 0;
    const std::uint32_t mask = (1u << m) - 1;
    for (std::size_t i = 0; i < static_cast<std::size_t>(m) - 1; ++i)
        window = (window << 1) | static_cast<std::uint32_t>(bits.bit(i));
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t wrap = (i + m - 1) % n;
        window = ((window << 1) | static_cast<std::uint32_t>(bits.bit(wrap))) & mask;
        ++counts[window];
    }
    double sum = 0.0;
    for (std::uint64_t c : counts) sum += static_cast<double>(c) * static_cast<double>(c);
    return sum * static_cast<double>(std::size_t{1} << m) / static_cast<double>(n) -
           static_cast<double>(n);
}

void require_window_fits(const BitSequence& bits, int m, const char* test) {
    // m must be below floor(log2 n) - 2.
    int log2n = 0;
    for (std::size_t v = bits.size(); v > 1; v >>= 1) ++log2n;
    if (m >= log2n - 2)
        throw InsufficientDataError(std::string(test) + " requires m < floor(log2 n) - 2");
}

TestReport serial(const BitSequence& bits, const TestParams& params) {
    const int m = params.serial_m;
    if (m < 2) throw std::invalid_argument("serial test needs m >= 2");
    require_window_fits(bits, m, "serial");
    const double psi_m = psi_squared(bits, m);
    const double psi_m1 = psi_squared(bits, m - 1);
    const double psi_m2 = psi_squared(bits, m - 2);
    const double del1 = psi_m - psi_m1;
    const double del2 = psi_m - 2.0 * psi_m1 + psi_m2;
    const double p1 = regularized_gamma_q(std::pow(2.0, m - 2), del1 / 2.0);
    const double p2 = regularized_gamma_q(std::pow(2.0, m - 3), del2 / 2.0);
    return make_report(TestId::Serial,
                       "n=" + std::to_string(bits.size()) + ",m=" + std::to_string(m),
                       {p1, p2}, params.alpha);
}

TestReport approximate_entropy(const BitSequence& bits, const TestParams& params) {
    const int m = params.entropy_m;
    if (m < 1) throw std::invalid_argument("approximate entropy needs m >= 1");
    require_window_fits(bits, m, "approximate entropy");
    const std::size_t n = bits.size();
    const auto phi = [&](int len) {
        std::vector<std::uint64_t> counts(std::size_t{1} << len, 0);
        std::uint32_t window = 0;
        const std::uint32_t mask = (1u << len) - 1;
        for (int i = 0; i < len - 1; ++i)
            window = (window << 1) | static_cast<std::uint32_t>(bits.bit(i));
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t wrap = (i + len - 1) % n;
            window = ((window << 1) | static_cast<std::uint32_t>(bits.bit(wrap))) & mask;
            ++counts[window];
        }
        double sum = 0.0;
        for (std::uint64_t c : counts)
            if (c > 0)
                sum += static_cast<double>(c) *
                       std::log(static_cast<double>(c) / static_cast<double>(n));
        return sum / static_cast<double>(n);
    };
    const double apen = phi(m) - phi(m + 1);
    const double chi2 = 2.0 * static_cast<double>(n) * (std::log(2.0) - apen);
    const double p = regularized_gamma_q(std::pow(2.0, m - 1), chi2 / 2.0);
    return make_report(TestId::ApproximateEntropy,
                       "n=" + std::to_string(n) + ",m=" + std::to_string(m), {p},
                       params.alpha);
}

}  // namespace

BitSequence::BitSequence(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (std::uint8_t b : bits_)
        if (b > 1) throw std::invalid_argument("bit sequence entries must be 0 or 1");
}

BitSequence BitSequence::parse_ascii(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c == '0')
            bits.push_back(0);
        else if (c == '1')
            bits.push_back(1);
        else if (c == ' ' || c == '\n' || c == '\r' || c == '\t')
            continue;
        else
            throw std::invalid_argument(std::string("unexpected character '") + c +
                                        "' in bitstream");
    }
    return BitSequence(std::move(bits));
}

std::string BitSequence::to_ascii() const {
    std::string out;
    out.reserve(bits_.size());
    for (std::uint8_t b : bits_) out.push_back(b ? '1' : '0');
    return out;
}

const char* to_string(TestId id) {
    switch (id) {
        case TestId::Monobit: return "monobit";
        case TestId::BlockFrequency: return "block_frequency";
        case TestId::Runs: return "runs";
        case TestId::LongestRunOfOnes: return "longest_run";
        case TestId::CumulativeSums: return "cumulative_sums";
        case TestId::Serial: return "serial";
        case TestId::ApproximateEntropy: return "approximate_entropy";
    }
    return "?";
}

TestId test_id_from_string(std::string_view name) {
    for (TestId id : all_tests())
        if (name == to_string(id)) return id;
    throw std::invalid_argument("unknown test id '" + std::string(name) + "'");
}

const std::vector<TestId>& all_tests() {
    static const std::vector<TestId> ids = {
        TestId::Monobit,        TestId::BlockFrequency, TestId::Runs,
        TestId::LongestRunOfOnes, TestId::CumulativeSums, TestId::Serial,
        TestId::ApproximateEntropy,
    };
    return ids;
}

TestReport run_test(const BitSequence& bits, TestId which, const TestParams& params) {
    if (bits.size() < 1) throw InsufficientDataError("empty bit sequence");
    switch (which) {
        case TestId::Monobit: return monobit(bits, params);
        case TestId::BlockFrequency: return block_frequency(bits, params);
        case TestId::Runs: return runs(bits, params);
        case TestId::LongestRunOfOnes: return longest_run_of_ones(bits, params);
        case TestId::CumulativeSums: return cumulative_sums(bits, params);
        case TestId::Serial: return serial(bits, params);
        case TestId::ApproximateEntropy: return approximate_entropy(bits, params);
    }
    throw std::invalid_argument("unknown test id");
}

std::vector<TestReport> run_battery(const BitSequence& bits, double alpha) {
    TestParams params;
    params.alpha = alpha;
    return run_battery(bits, params);
}

std::vector<TestReport> run_battery(const BitSequence& bits, const TestParams& params) {
    std::vector<TestReport> reports;
    for (TestId id : all_tests()) {
        try {
            reports.push_back(run_test(bits, id, params));
        } catch (const InsufficientDataError& e) {
            TestReport report;
            report.name = to_string(id);
            report.params = "n=" + std::to_string(bits.size());
            report.pass = false;
            report.error = e.what();
            reports.push_back(std::move(report));
        }
    }
    return reports;
}

void export_bitstream(const BitSequence& bits, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    const std::string ascii = bits.to_ascii();
    out.write(ascii.data(), static_cast<std::streamsize>(ascii.size()));
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

double chi_square_uniform_pvalue(const std::vector<std::uint64_t>& counts) {
    if (counts.size() < 2) throw std::invalid_argument("need at least two bins");
    std::uint64_t total = 0;
    for (std::uint64_t c : counts) total += c;
    if (total == 0) throw std::invalid_argument("no observations");
    const double expected = static_cast<double>(total) / static_cast<double>(counts.size());
    double chi2 = 0.0;
    for (std::uint64_t c : counts) {
        const double d = static_cast<double>(c) - expected;
        chi2 += d * d / expected;
    }
    return chi_square_pvalue(chi2, static_cast<double>(counts.size() - 1));
}

std::string reports_csv(const std::vector<TestReport>& reports) {
    std::string out = "test,params,p_values,pass\n";
    for (const TestReport& r : reports) {
        out += r.name;
        out += ',';
        out += r.params;
        out += ',';
        if (!r.error.empty()) {
            out += "insufficient-data";
        } else {
            for (std::size_t i = 0; i < r.p_values.size(); ++i) {
                if (i) out += ';';
                out += format_double(r.p_values[i]);
            }
        }
        out += ',';
        out += r.pass ? "PASS" : "FAIL";
        out += '\n';
    }
    return out;
}

}  // namespace boolnet
