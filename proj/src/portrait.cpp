#include "cesaro/portrait.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cesaro/cesaro_op.hpp"
#include "cesaro/named_functions.hpp"
#include "cesaro/norms.hpp"
#include "cesaro/parse.hpp"
#include "cesaro/resolvent.hpp"
#include "cesaro/serialization.hpp"

namespace cesaro {

std::string to_string(EvidenceType e)
{
    switch (e) {
    case EvidenceType::EigenResidual: return "eigen_residual";
    case EvidenceType::ResolventResidual: return "resolvent_residual";
    case EvidenceType::CriticalRejection: return "critical_rejection";
    case EvidenceType::None: return "none";
    }
    return "?";
}

Verdict SpectralPortraitReport::verdict() const
{
    Verdict v = Verdict::Consistent;
    for (const auto& r : records) {
        if (r.verdict == Verdict::Inconsistent) return Verdict::Inconsistent;
        if (r.verdict == Verdict::Inconclusive) v = Verdict::Inconclusive;
    }
    return v;
}

namespace {

int evidence_intervals(const SpaceSpec& spec, const PortraitOptions& o)
{
    if (o.evidence_intervals > 0) return o.evidence_intervals;
    return (spec.space == Space::Cl || spec.space == Space::LpHalf) ? 4096 : 1024;
}

void resolvent_evidence(PortraitRecord& rec, const SpaceSpec& spec, const PortraitOptions& o)
{
    const GridPtr grid = standard_grid(spec, evidence_intervals(spec, o));
    double worst = 0.0, gain = 0.0;
    for (const NamedFunction& fn : resolvent_corpus(spec)) {
        const GridFunction f = build_named_function(fn, grid);
        const GridFunction u = resolvent_apply(f, rec.lambda, spec, o.rule);
        const GridFunction r = combine(rec.lambda, u, -1.0, apply_cesaro(u, o.rule)) - f;
        worst = std::max(worst, space_measure(r, spec, 3, o.rule));
        gain = std::max(gain, space_measure(u, spec, 3, o.rule) / space_measure(f, spec, 3, o.rule));
    }
    rec.evidence = EvidenceType::ResolventResidual;
    rec.residual = worst;
    rec.resolvent_norm_estimate = gain;
    rec.verdict = worst <= o.tolerance ? Verdict::Consistent : Verdict::Inconsistent;
    if (resolvent_branch(rec.lambda, spec) == ResolventBranch::Q) rec.note = "Q branch";
}

} // namespace

PortraitRecord portrait_record(Complex lambda, const SpaceSpec& spec, const PortraitOptions& o)
{
    PortraitRecord rec;
    rec.lambda = lambda;
    rec.predicted = classify(lambda, spec);
    switch (rec.predicted) {
    case SpectralClass::PointSpectrum: {
        const Membership m = eigen_membership(lambda, spec);
        if (m != Membership::Yes) {
            rec.verdict = Verdict::Inconsistent;
            rec.note = "predicted eigenvalue but g_lambda membership is " + to_string(m);
            break;
        }
        rec.evidence = EvidenceType::EigenResidual;
        rec.residual = eigen_residual(lambda, spec, o.rule, o.eigen_intervals);
        rec.verdict = *rec.residual <= o.tolerance ? Verdict::Consistent : Verdict::Inconsistent;
        break;
    }
    case SpectralClass::Resolvent: resolvent_evidence(rec, spec, o); break;
    case SpectralClass::Critical: {
        rec.evidence = EvidenceType::CriticalRejection;
        // the resolvent formulas must refuse this point
        try {
            resolvent_branch(lambda, spec);
            rec.verdict = Verdict::Inconsistent;
            rec.note = "critical point was not rejected";
        } catch (const CriticalCircleError& e) {
            rec.verdict = Verdict::Consistent;
            rec.note = e.what();
        }
        break;
    }
    case SpectralClass::ContinuousSpectrum:
        rec.evidence = EvidenceType::None;
        rec.verdict = Verdict::Inconclusive;
        rec.note = "lambda = 0 carries no numerical evidence";
        break;
    }
    return rec;
}

SpectralPortraitReport spectral_portrait(const SpaceSpec& spec, const std::vector<Complex>& lambdas,
                                         const PortraitOptions& options)
{
    SpectralPortraitReport rep;
    rep.space = spec;
    rep.region = analytic_region(spec);
    rep.options = options;
    rep.records.resize(lambdas.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < lambdas.size(); i = next++) {
            try {
                rep.records[i] = portrait_record(lambdas[i], spec, options);
            } catch (const std::exception& e) {
                rep.records[i].lambda = lambdas[i];
                rep.records[i].predicted = classify(lambdas[i], spec);
                rep.records[i].verdict = Verdict::Inconclusive;
                rep.records[i].note = std::string("evidence failed: ") + e.what();
            }
        }
    };
    unsigned n_threads = options.threads > 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    n_threads = std::min<unsigned>(n_threads, std::max<std::size_t>(1, lambdas.size()));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
        worker();
    }

    const OperatorMatrix M = discretize_grid(spec, standard_grid(spec, options.matrix_intervals), options.rule);
    rep.discretization = M.describe();
    rep.eigenvalues = eigenvalues(M);
    for (Complex z : rep.eigenvalues) {
        if (rep.region.in_spectrum(z, 1e-8)) ++rep.eigenvalues_in_region;
    }
    rep.notes.push_back("eigenvalues belong to the finite section " + rep.discretization +
                        "; classification comes from the analytic region");
    return rep;
}

std::vector<Complex> parse_lambda_grid(const std::string& text)
{
    const auto axes = split(text, ',');
    if (axes.size() != 2) throw std::invalid_argument("lambda grid needs 're_min:re_max:step,im_min:im_max:step'");
    auto axis = [&](std::string_view a) {
        const auto p = split(a, ':');
        if (p.size() != 3) throw std::invalid_argument("lambda grid axis needs min:max:step, got '" + std::string(a) + "'");
        const double lo = parse_double(p[0]), hi = parse_double(p[1]), step = parse_double(p[2]);
        if (!(step > 0.0) || hi < lo) throw std::invalid_argument("lambda grid axis needs min <= max and step > 0");
        const long count = std::lround(std::floor((hi - lo) / step + 1e-9));
        if (count > 100000) throw std::invalid_argument("lambda grid axis is too long");
        std::vector<double> v;
        for (long k = 0; k <= count; ++k) {
            const double t = lo + step * k;
            v.push_back(std::abs(t) < 1e-9 * step ? 0.0 : t); // -0.5 + 5*0.1 is not exactly 0
        }
        return v;
    };
    const auto re = axis(axes[0]);
    const auto im = axis(axes[1]);
    std::vector<Complex> out;
    for (double y : im) {
        for (double x : re) {
            if (x == 0.0 && y == 0.0) continue;
            out.emplace_back(x, y);
        }
    }
    return out;
}

nlohmann::json to_json(const SpectralPortraitReport& r)
{
    auto pair = [](Complex z) { return nlohmann::json::array({z.real(), z.imag()}); };
    auto opt = [](const std::optional<double>& v) {
        if (!v) return nlohmann::json(nullptr);
        return std::isfinite(*v) ? nlohmann::json(*v) : nlohmann::json(format_number(*v));
    };
    nlohmann::json recs = nlohmann::json::array();
    for (const auto& rec : r.records) {
        recs.push_back({{"lambda", pair(rec.lambda)},
                        {"predicted_class", to_string(rec.predicted)},
                        {"evidence_type", to_string(rec.evidence)},
                        {"residual", opt(rec.residual)},
                        {"resolvent_norm_estimate", opt(rec.resolvent_norm_estimate)},
                        {"verdict", to_string(rec.verdict)},
                        {"note", rec.note}});
    }
    nlohmann::json eig = nlohmann::json::array();
    for (Complex z : r.eigenvalues) eig.push_back(pair(z));
    nlohmann::json space = {{"name", r.space.name()}, {"key", r.space.key()}};
    if (r.space.is_lp()) {
        space["p"] = r.space.p;
        space["q"] = r.space.q();
    }
    return {{"space", space},
            {"region",
             {{"shape", to_string(r.region.shape)},
              {"center", pair(r.region.center)},
              {"radius", r.region.radius},
              {"point_spectrum", to_string(r.region.point)}}},
            {"options",
             {{"matrix_intervals", r.options.matrix_intervals},
              {"evidence_intervals", evidence_intervals(r.space, r.options)},
              {"eigen_intervals", r.options.eigen_intervals},
              {"tolerance", r.options.tolerance},
              {"quadrature", r.options.rule.name()}}},
            {"records", recs},
            {"discretization",
             {{"basis", r.discretization}, {"eigenvalues", eig}, {"in_region", r.eigenvalues_in_region}}},
            {"verdict", to_string(r.verdict())},
            {"notes", r.notes}};
}

std::string portrait_csv(const SpectralPortraitReport& r)
{
    std::string out = "re_lambda,im_lambda,class,residual\n";
    for (const auto& rec : r.records) {
        out += format_number(rec.lambda.real()) + ',' + format_number(rec.lambda.imag()) + ',' +
               to_string(rec.predicted) + ',' + (rec.residual ? format_number(*rec.residual) : std::string()) + '\n';
    }
    return out;
}

} // namespace cesaro
