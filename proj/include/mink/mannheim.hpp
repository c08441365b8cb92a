#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mink/frames.hpp"

namespace mink {

/// Causal type of a partner pair, by the surface/curve characters of
/// (S, x) and (S1, x1):
///   1: S spacelike, x spacelike; S1 timelike, x1 spacelike
///   2: S spacelike, x spacelike; S1 timelike, x1 timelike
///   3: S timelike,  x timelike;  S1 timelike, x1 timelike
///   4: S timelike,  x timelike;  S1 timelike, x1 spacelike
///   5: S timelike,  x spacelike; S1 spacelike, x1 spacelike
enum class PairType { Type1 = 1, Type2, Type3, Type4, Type5 };

inline const char* pair_type_name(PairType t) {
    switch (t) {
        case PairType::Type1: return "Type1";
        case PairType::Type2: return "Type2";
        case PairType::Type3: return "Type3";
        case PairType::Type4: return "Type4";
        case PairType::Type5: return "Type5";
    }
    return "?";
}

/// Classify from the four causal characters; throws UnclassifiableType for
/// combinations outside the five admissible patterns.
PairType classify_pair_type(CausalClass S1, CausalClass x1,
                            CausalClass S, CausalClass x);

struct MannheimPair {
    FramedCurve x1;       // the partner curve, with its normal field n1
    double lambda = 0;    // constant offset, x = x1 + lambda n1
    FramedCurve x;        // derived curve; its Darboux g coincides with n1
    PairType type = PairType::Type1;
    std::vector<double> grid;   // construction grid in x1's parameter
    double lambda_verify = 0;   // lambda used by the verifiers (negative-control hook)
};

MannheimPair construct_pair(const FramedCurve& x1, double lambda, int grid_n = 33);

struct PairSample {
    double t = 0;           // shared curve parameter
    double s1 = 0, s = 0;   // arc lengths from the domain start
    double ds_ds1 = 0;
    double theta = 0;       // signed, from the tangent decomposition
    double dtheta_ds1 = 0;
    AngleKind theta_kind = AngleKind::Central;
    double c_slot = 0, s_slot = 0;  // cosh/cos and sinh/sin slots of theta
    // Darboux scalars of x and x1
    double kg = 0, kn = 0, taug = 0;
    double kg1 = 0, kn1 = 0, taug1 = 0;
    // derivatives with respect to s1
    double dkn1 = 0, dtaug1 = 0, dkg = 0, dtaug = 0, dkg1 = 0;
    // internal consistency residuals of the arc-rate relations
    double res_eq12a = 0, res_eq12b = 0, res_eq13 = 0;
};

PairSample pair_sample(const MannheimPair& p, double t);

enum class SignVariant { AsPrinted, Flipped, NotApplicable };

inline const char* sign_variant_name(SignVariant v) {
    switch (v) {
        case SignVariant::AsPrinted: return "as-printed";
        case SignVariant::Flipped: return "flipped";
        case SignVariant::NotApplicable: return "not-applicable";
    }
    return "?";
}

struct VerificationReport {
    std::string relation_id;
    std::vector<double> residuals;       // per grid sample, scaled by max(1,|rhs|)
    double max_abs_residual = 0;
    double tolerance = 0;
    bool pass = false;
    SignVariant sign_variant_used = SignVariant::NotApplicable;
    std::string note;
};

std::vector<PairSample> sample_grid(const MannheimPair& p,
                                    const std::vector<double>& grid);

std::vector<VerificationReport> verify_thm41(const MannheimPair& p,
                                             const std::vector<double>& grid, double tol);
std::vector<VerificationReport> verify_thm42(const MannheimPair& p,
                                             const std::vector<double>& grid, double tol);
std::vector<VerificationReport> verify_thm43(const MannheimPair& p,
                                             const std::vector<double>& grid, double tol);
std::vector<VerificationReport> verify_corollaries(const MannheimPair& p,
                                                   const std::vector<double>& grid, double tol);
std::vector<VerificationReport> verify_special_asymptotic(const MannheimPair& p,
                                                          const std::vector<double>& grid,
                                                          double tol);

}  // namespace mink
