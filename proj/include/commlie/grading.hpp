#ifndef COMMLIE_GRADING_HPP
#define COMMLIE_GRADING_HPP

#include "commlie/commuting.hpp"

#include <map>
#include <string>
#include <vector>

namespace commlie {

/// sl2-triple: [h,x] = 2x, [h,y] = -2y, [x,y] = h, all exact.
struct Sl2Triple {
    LieElement x, h, y;
};

/// Complete (x, h) with [h,x] = 2x to a triple by solving the linear system
/// [x,y] = h, [h,y] = -2y. Throws when [h,x] != 2x or no y exists (a wrong h
/// or a sign-convention mismatch; investigate rather than trying alternate
/// conventions).
Sl2Triple sl2_complete(const LieElement& x, const LieElement& h);

/// Integer eigenspace decomposition L_i = ker(ad h - i) for h in the Cartan
/// subalgebra. Fails unless the pieces fill the algebra.
struct GradingReport {
    int top_degree;
    std::map<int, Subspace> pieces; // nonzero pieces only
};

GradingReport grade_by(const LieElement& h);

/// dim(L_i /\ C(x)) per nonzero degree of the grading by h.
std::map<int, std::size_t> graded_centralizer_dims(const LieElement& x, const LieElement& h);

/// One stage of the chained reducibility certificate.
struct CertStage {
    std::string name;
    long long expected;
    long long computed;
    bool pass;
};

/// The full dimension chain for the E7 nilpotent-orbit construction: from
/// the 49-dimensional centralizer through the graded pieces to the bound
/// 133 + 63 - 49 = 147 meeting the regular-component dimension.
struct E7Certificate {
    std::vector<CertStage> stages;
    bool pass;
    std::string failed_stage; // empty when pass
};

E7Certificate e7_reducibility_certificate(const AlgebraRef& e7);

/// Membership/independence report for the tabulated bases of L_2 /\ C(x)
/// and L_4 /\ C(x): each listed element must land in the computed space,
/// possibly after flipping the sign of a single term (such residual sign
/// differences are reported, not failed).
struct TabulatedBasisReport {
    std::size_t deg2_members, deg2_rank;
    std::size_t deg4_members, deg4_rank;
    std::vector<std::string> sign_residuals;
    bool pass;
};

TabulatedBasisReport e7_tabulated_basis_check(const AlgebraRef& e7);

/// Reducibility threshold for the so_{4s} construction: the tuple-space
/// lower bound (s^2+3s)/2 beats the regular gain 4s exactly when
/// s(s-5) >= 0, i.e. from s = 5 on.
struct SoThresholdVerdict {
    int s;
    Rational sprime_gain; // (s^2+3s)/2
    long long regular_gain; // 4s
    bool reducible;
};

SoThresholdVerdict so_reducibility_threshold(int s);

} // namespace commlie

#endif
