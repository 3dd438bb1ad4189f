#include "hyperalg/error.hpp"

namespace hyperalg {

const char* errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::LevelMismatch: return "LevelMismatch";
        case Errc::LevelTooLarge: return "LevelTooLarge";
        case Errc::NormZero: return "NormZero";
        case Errc::InvalidConjugation: return "InvalidConjugation";
        case Errc::InvalidAlgebra: return "InvalidAlgebra";
        case Errc::AlgebraMismatch: return "AlgebraMismatch";
        case Errc::DimTooLarge: return "DimTooLarge";
        case Errc::NoFunctional: return "NoFunctional";
        case Errc::InvalidTopology: return "InvalidTopology";
        case Errc::InvalidPoset: return "InvalidPoset";
        case Errc::NotHeyting: return "NotHeyting";
        case Errc::InvalidFilter: return "InvalidFilter";
        case Errc::SetTooLarge: return "SetTooLarge";
        case Errc::InfiniteGroup: return "InfiniteGroup";
        case Errc::OffVariety: return "OffVariety";
        case Errc::ResolutionTooSmall: return "ResolutionTooSmall";
        case Errc::UnstableStep: return "UnstableStep";
        case Errc::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

}  // namespace hyperalg
