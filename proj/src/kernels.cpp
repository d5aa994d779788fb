#include "derivpoly/kernels.hpp"

#include <cstdlib>
#include <string>

namespace derivpoly::kernels {

int apply_thread_cap_from_env()
{
    const char* env = std::getenv("DERIVPOLY_THREADS");
    if (env == nullptr)
        return 0;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v <= 0)
        return 0;
#ifdef _OPENMP
    omp_set_num_threads(static_cast<int>(v));
#endif
    return static_cast<int>(v);
}

} // namespace derivpoly::kernels
