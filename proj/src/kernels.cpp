#include "uepharq/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace uepharq::kernels {

const Table& active() {
    static const Table* chosen = [] {
        const char* env = std::getenv("UEPHARQ_KERNELS");
        if (env && std::strcmp(env, "scalar") == 0)
            return &scalar();
        if (env && std::strcmp(env, "avx2") == 0 && avx2())
            return avx2();
        if (const Table* t = avx2())
            return t;
        return &scalar();
    }();
    return *chosen;
}

}  // namespace uepharq::kernels
