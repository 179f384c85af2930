// actispec — frequency-band activity classification for tri-axial accelerometer streams.
// SPDX-License-Identifier: MIT
#ifndef ACTISPEC_PREPROCESS_HPP
#define ACTISPEC_PREPROCESS_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "actispec/calibration.hpp"
#include "actispec/error.hpp"
#include "actispec/filter.hpp"

namespace actispec {

// Per-axis body acceleration plus the fused RMS series of the same length.
struct body_signal {
  std::vector<double> xb, yb, zb;  // high-passed per-axis body acceleration, g
  std::vector<double> ba;          // sqrt(xb² + yb² + zb²), g
  double sample_rate_hz = 0.0;
};

// The RMS fusion of the three body-acceleration components. Written with
// std::sqrt over an exact sum of squares so that (3, 4, 0) gives exactly 5
// and the result always dominates each |component|.
inline double fuse_rms(double xb, double yb, double zb) {
  return std::sqrt(xb * xb + yb * yb + zb * zb);
}

namespace detail {

// Sliding-window state for the causal moving average, summing oldest→newest
// so that the incremental path is arithmetically identical to the batch one.
template <std::size_t MaxOrder = 8>
class ma_state {
 public:
  explicit ma_state(std::size_t order) : order_(order) {}

  double step(double x) {
    if (count_ < order_) {
      window_[count_++] = x;
    } else {
      for (std::size_t i = 1; i < order_; ++i) window_[i - 1] = window_[i];
      window_[order_ - 1] = x;
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < count_; ++i) sum += window_[i];
    return sum / static_cast<double>(count_);
  }

 private:
  std::size_t order_;
  std::size_t count_ = 0;
  double window_[MaxOrder] = {};
};

}  // namespace detail

// Causal moving average: out[n] is the mean of the last `order` samples, or of
// the n+1 available ones during warm-up, so output length equals input length.
inline std::vector<double> moving_average(std::span<const double> series, std::size_t order) {
  if (order == 0) raise(errc::parameter, "moving average order must be >= 1");
  std::vector<double> out;
  out.reserve(series.size());
  if (order <= 8) {
    detail::ma_state<8> st(order);
    for (double x : series) out.push_back(st.step(x));
  } else {
    for (std::size_t n = 0; n < series.size(); ++n) {
      const std::size_t lo = n + 1 >= order ? n + 1 - order : 0;
      double sum = 0.0;
      for (std::size_t i = lo; i <= n; ++i) sum += series[i];
      out.push_back(sum / static_cast<double>(n - lo + 1));
    }
  }
  return out;
}

// Full preprocessing of a calibrated series: per axis, order-3 moving average
// then the gravity high-pass, then the RMS fusion. The gravity filter is
// warm-started in its DC steady state from each axis's first smoothed sample,
// so a constant input (gravity) is rejected from sample 0 rather than after a
// multi-minute transient.
inline body_signal body_accel(std::span<const calibrated_sample> calibrated,
                              double sample_rate_hz) {
  if (calibrated.empty()) raise(errc::empty_input, "body_accel needs a non-empty series");
  const filter_cascade cascade = design_gravity_filter(sample_rate_hz);

  body_signal sig;
  sig.sample_rate_hz = sample_rate_hz;
  const std::size_t n = calibrated.size();
  sig.xb.reserve(n);
  sig.yb.reserve(n);
  sig.zb.reserve(n);
  sig.ba.reserve(n);

  detail::ma_state<8> ma_x(3), ma_y(3), ma_z(3);
  cascade_state hp_x(cascade), hp_y(cascade), hp_z(cascade);
  hp_x.warm_start(calibrated[0].ax);
  hp_y.warm_start(calibrated[0].ay);
  hp_z.warm_start(calibrated[0].az);

  for (const calibrated_sample& s : calibrated) {
    const double xb = hp_x.step(ma_x.step(s.ax));
    const double yb = hp_y.step(ma_y.step(s.ay));
    const double zb = hp_z.step(ma_z.step(s.az));
    sig.xb.push_back(xb);
    sig.yb.push_back(yb);
    sig.zb.push_back(zb);
    sig.ba.push_back(fuse_rms(xb, yb, zb));
  }
  return sig;
}

}  // namespace actispec

#endif  // ACTISPEC_PREPROCESS_HPP
