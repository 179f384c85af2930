// actispec — frequency-band activity classification for tri-axial accelerometer streams.
// SPDX-License-Identifier: MIT
//
// Umbrella header: pulls in the whole library.
//
// Pipeline at a glance (raw ADC counts → per-block activity labels):
//   ingest      parse `[index,]ax,ay,az` text or a line stream into datasets
//   calibration linear counts→g map; offsets estimated from an initial
//               stationary window (device upright: x=0, y=0, z=+1 g)
//   preprocess  order-3 moving average, order-7 elliptic 0.5 Hz high-pass
//               (gravity removal), RMS fusion into the body-acceleration series
//   spectrum    per 64-sample block: demeaned, zero-padded 256-point FFT,
//               normalized magnitudes, non-DC peak
//   classifier  peak-frequency band decision (run ≻ walk ≻ rest, else misc),
//               batch and streaming drivers that share one state machine
//   eval        block-by-block confusion matrices and accuracy tables
//   gen         seeded synthetic corpus generator with exact ground truth
#ifndef ACTISPEC_ACTISPEC_HPP
#define ACTISPEC_ACTISPEC_HPP

#include "actispec/calibration.hpp"
#include "actispec/classifier.hpp"
#include "actispec/config.hpp"
#include "actispec/error.hpp"
#include "actispec/eval.hpp"
#include "actispec/fft.hpp"
#include "actispec/filter.hpp"
#include "actispec/gen.hpp"
#include "actispec/ingest.hpp"
#include "actispec/preprocess.hpp"
#include "actispec/rng.hpp"
#include "actispec/spectrum.hpp"
#include "actispec/types.hpp"

#endif  // ACTISPEC_ACTISPEC_HPP
