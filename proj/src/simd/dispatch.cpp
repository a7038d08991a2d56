#include <cstdlib>
#include <string_view>

#include "gsim/simd.hpp"

namespace gsim::simd {

namespace {

constexpr KernelTable kScalar{Isa::scalar, &scalar::dot, &scalar::gemv, &scalar::rotate};
#if defined(__x86_64__) || defined(_M_X64)
constexpr KernelTable kAvx2{Isa::avx2, &avx2::dot, &avx2::gemv, &avx2::rotate};
#endif
#if defined(__aarch64__)
constexpr KernelTable kNeon{Isa::neon, &neon::dot, &neon::gemv, &neon::rotate};
#endif

const KernelTable& select() {
    if (const char* forced = std::getenv("GSIM_ISA")) {
        const std::string_view name(forced);
        for (Isa isa : available_isas()) {
            if (isa_name(isa) == name) return *kernels_for(isa);
        }
    }
    const auto isas = available_isas();
    return *kernels_for(isas.back());
}

}  // namespace

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
        case Isa::neon: return "neon";
    }
    return "unknown";
}

const KernelTable* kernels_for(Isa isa) {
    switch (isa) {
        case Isa::scalar: return &kScalar;
        case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
            if (__builtin_cpu_supports("avx2")) return &kAvx2;
#endif
            return nullptr;
        case Isa::neon:
#if defined(__aarch64__)
            return &kNeon;
#else
            return nullptr;
#endif
    }
    return nullptr;
}

std::vector<Isa> available_isas() {
    std::vector<Isa> out;
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
        if (kernels_for(isa)) out.push_back(isa);
    }
    return out;
}

const KernelTable& kernels() {
    static const KernelTable& table = select();
    return table;
}

}  // namespace gsim::simd
