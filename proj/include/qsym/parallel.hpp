#pragma once

namespace qsym {

/// Worker count for OpenMP regions: QEULER_THREADS if set to a positive
/// integer, else the OpenMP default (machine parallelism).
int worker_threads();

}  // namespace qsym
