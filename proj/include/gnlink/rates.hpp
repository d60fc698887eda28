#ifndef GNLINK_RATES_HPP
#define GNLINK_RATES_HPP

#include <vector>

namespace gnlink {

struct RateAssignment {
    std::vector<double> rate_set;          // sorted ascending, size <= K
    std::vector<double> per_channel_rate;  // 0 when no rate qualifies
    double total_throughput_bps = 0.0;
};

/// Choose at most K code rates from the observed NGMI values and assign each
/// channel the largest qualifying rate, maximizing
///   sum_i 2 R_s m_i max{r in set : r <= ngmi_i}.
/// Exact dynamic program over channels sorted by NGMI descending, O(N^2 K).
RateAssignment select_code_rates(const std::vector<double>& ngmi_per_channel,
                                 const std::vector<int>& bits_per_channel,
                                 double symbol_rate_hz, int k_rates);

/// Dual-polarization throughput of an assignment:
///   sum_i 2 R_s m_i r_i.
double throughput(const RateAssignment& assignment, const std::vector<int>& bits_per_channel,
                  double symbol_rate_hz);

} // namespace gnlink

#endif
