#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cesaro/experiment_report.hpp"
#include "cesaro/spectra.hpp"

namespace cesaro {

struct PortraitOptions {
    int matrix_intervals = 128;   // size of the grid discretization whose eigenvalues are listed
    int evidence_intervals = 0;   // 0: 4096 on Cl and L^p(R+), 1024 elsewhere
    int eigen_intervals = 2048;
    double tolerance = 1e-4;
    int threads = 0;              // 0: hardware concurrency
    QuadratureRule rule = QuadratureRule::gauss_legendre();
};

enum class EvidenceType { EigenResidual, ResolventResidual, CriticalRejection, None };
std::string to_string(EvidenceType e);

struct PortraitRecord {
    Complex lambda;
    SpectralClass predicted = SpectralClass::Resolvent;
    EvidenceType evidence = EvidenceType::None;
    std::optional<double> residual;
    std::optional<double> resolvent_norm_estimate; // max over the corpus of ||R f|| / ||f||
    Verdict verdict = Verdict::Inconclusive;
    std::string note;
};

struct SpectralPortraitReport {
    SpaceSpec space;
    SpectralRegion region;
    PortraitOptions options;
    std::vector<PortraitRecord> records;
    std::string discretization;         // description of the matrix
    std::vector<Complex> eigenvalues;   // of the finite section, not of C
    int eigenvalues_in_region = 0;
    std::vector<std::string> notes;

    Verdict verdict() const; // consistent iff every record is
};

/// Classifies each lambda against the analytic region and attaches evidence:
/// the eigen residual for predicted point spectrum, resolvent residual and a
/// norm estimate for predicted resolvent points, and a checked rejection on the
/// critical circle. Runs the samples on worker threads.
SpectralPortraitReport spectral_portrait(const SpaceSpec& spec, const std::vector<Complex>& lambdas,
                                         const PortraitOptions& options = {});

PortraitRecord portrait_record(Complex lambda, const SpaceSpec& spec, const PortraitOptions& options);

/// "re_min:re_max:step,im_min:im_max:step", both ends inclusive. lambda = 0
/// is skipped.
std::vector<Complex> parse_lambda_grid(const std::string& text);

nlohmann::json to_json(const SpectralPortraitReport& r);

/// Header `re_lambda,im_lambda,class,residual`; empty residual when there is none.
std::string portrait_csv(const SpectralPortraitReport& r);

} // namespace cesaro
