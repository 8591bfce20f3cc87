#pragma once

namespace sqbetti {

/// Worker count for the OpenMP kernels: SQBETTI_THREADS if set to a positive
/// integer, otherwise the OpenMP default. 0 or an unparsable value means auto.
int workerCount();

}  // namespace sqbetti
