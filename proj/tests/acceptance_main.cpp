#include <cstdio>

#include "weissler/acceptance.hpp"
#include "weissler/kernels.hpp"

int main() {
    std::printf("kernel backend: %s\n",
                std::string(weissler::kernels::backend_name(weissler::kernels::active_backend())).c_str());
    int failed = 0;
    for (const auto& r : weissler::run_acceptance()) {
        std::printf("%s\n", weissler::format_row(r).c_str());
        if (!r.passed) ++failed;
    }
    std::printf("%d of 8 criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
