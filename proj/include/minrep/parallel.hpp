#pragma once

namespace minrep {

/// Worker count for OpenMP regions: MINREP_THREADS if set and positive,
/// otherwise the OpenMP default. Always 1 in builds without OpenMP.
int worker_count();

} // namespace minrep
