// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace uavmm {

/// Execution mode for the batch kernels. Serial is the reference
/// implementation; Parallel uses OpenMP and must produce bit-identical
/// results (every output slot is computed independently, reductions run in
/// fixed index order). Parallel falls back to serial when built without
/// OpenMP.
enum class Exec { Serial, Parallel };

}  // namespace uavmm
