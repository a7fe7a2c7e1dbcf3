#pragma once

#include "calab/kernels/kernels.hpp"

namespace calab::kernels::detail {

extern const KernelTable kScalarTable;
#if defined(CALAB_HAVE_AVX2)
extern const KernelTable kAvx2Table;
#endif

}  // namespace calab::kernels::detail
