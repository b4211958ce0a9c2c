#ifndef COMMLIE_VERIFY_HPP
#define COMMLIE_VERIFY_HPP

#include "commlie/report.hpp"

#include <string>
#include <vector>

namespace commlie {

/// Options for the reproduction suite. Sections: app2, 4.1, 4.2, 4.3, 4.4,
/// 4.5, lemmas; an empty filter runs everything. m_values feeds the checks
/// that are affine in the tuple length (each section keeps the m it can use).
struct VerifyOptions {
    std::string section;
    std::vector<int> m_values = {3, 4, 5, 6, 8};
    long max_norm = 0;
};

std::vector<VerificationRecord> verify_paper(const VerifyOptions& opt);

} // namespace commlie

#endif
