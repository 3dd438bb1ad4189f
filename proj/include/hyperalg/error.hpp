#pragma once

#include <stdexcept>
#include <string>

namespace hyperalg {

enum class Errc {
    LevelMismatch,
    LevelTooLarge,
    NormZero,
    InvalidConjugation,
    InvalidAlgebra,
    AlgebraMismatch,
    DimTooLarge,
    NoFunctional,
    InvalidTopology,
    InvalidPoset,
    NotHeyting,
    InvalidFilter,
    SetTooLarge,
    InfiniteGroup,
    OffVariety,
    ResolutionTooSmall,
    UnstableStep,
    InvalidInput,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace hyperalg
