#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "musca/rng.hpp"

namespace musca {

struct DegreeEntry {
    int degree;
    double probability;
};

/// Probability mass over user degrees. Entries are validated at
/// construction: degrees unique and >= 1, probabilities >= 0 and summing to
/// 1 within 1e-9. Zero-probability entries are dropped, so entries() is the
/// support.
class DegreeDistribution {
public:
    explicit DegreeDistribution(std::vector<DegreeEntry> entries);

    const std::vector<DegreeEntry>& entries() const { return entries_; }
    int max_degree() const { return entries_.back().degree; }
    double mean_degree() const;
    double probability_of(int degree) const;

    /// Draw a degree according to the mass function.
    int sample(Rng& rng) const;

    /// Degenerate distribution x^degree.
    static DegreeDistribution single(int degree);

    /// Parse "1:0.1,2:0.3,3:0.6".
    static DegreeDistribution parse(std::string_view text);

    std::string to_string() const;

    bool operator==(const DegreeDistribution& other) const { return cumulative_ == other.cumulative_ && degrees_equal(other); }

private:
    bool degrees_equal(const DegreeDistribution& other) const;

    std::vector<DegreeEntry> entries_;   // sorted by degree, zero masses removed
    std::vector<double> cumulative_;     // running sums, same order
};

/// Per-degree code parameters. The paper-default family couples the data
/// code rate to the degree as R_d = 1/(2*N_b), so every user carries the
/// same number of information bits per slot.
struct CodeProfile {
    int degree = 0;
    double data_rate = 0.0;       // R_d
    int info_bits = 0;            // k
    int modulation_order = 2;     // M
    double signalling_rate = 1.0; // R_s
    std::string code_id;            // PerTable key for the data code
    std::string signalling_code_id; // PerTable key for the signalling code ("" for degree 1)

    /// Data-field symbols per burst, k / (R_d * N_b * log2(M)). Throws if
    /// the parameters do not yield a positive integer.
    int data_field_symbols() const;
};

using ProfileMap = std::map<int, CodeProfile>;

/// The turbo-code family used throughout: k = 456, QPSK, R_d = 1/(2*N_b)
/// for degrees 1..3, signalling protected by the (14,64) Reed-Muller code.
ProfileMap default_profiles();

} // namespace musca
