#include "kn/kernel.hpp"

namespace kn::kernel {

bool avx2_available() {
#if defined(__x86_64__) && defined(__GNUC__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

pair_count_fn select_pair_count() {
    static const pair_count_fn chosen = avx2_available() ? &same_page_pairs_avx2 : &same_page_pairs_scalar;
    return chosen;
}

const char* selected_kernel_name() {
    return select_pair_count() == &same_page_pairs_avx2 ? "avx2" : "scalar";
}

}  // namespace kn::kernel
