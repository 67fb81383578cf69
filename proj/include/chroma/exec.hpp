#pragma once

namespace chroma {

// Scan kernels come in two flavors: a plain serial loop and an OpenMP
// version. Results are bit-identical; reductions are order-independent
// (integer sums, min-index witnesses).
enum class ExecPolicy { Serial, Parallel };

} // namespace chroma
