#pragma once

#include <stdexcept>
#include <string>

namespace mink {
namespace tol {
inline constexpr double null_tol = 1e-10;
inline constexpr double angle_tol = 1e-10;
inline constexpr double div_tol = 1e-12;
inline constexpr double fn_tol = 1e-12;
inline constexpr double kappa_tol = 1e-9;
inline constexpr double frame_tol = 1e-9;
inline constexpr double offset_tol = 1e-6;
inline constexpr double pair_tol = 1e-9;
}  // namespace tol

enum class Err {
    // vector kernel
    NullInput,
    OppositeOrientation,
    // jets
    DivisionNearZero,
    DomainError,
    OrderExceeded,
    // expression language
    SyntaxError,
    UnknownIdentifier,
    // frames
    NullVelocity,
    VanishingCurvature,
    NullPrincipalNormal,
    DegeneratePatch,
    FrameSignatureMismatch,
    // pairs
    LambdaZero,
    OffsetSingular,
    UnclassifiableType,
    CausalDrift,
    ThetaDegenerate,
    NotAsymptotic,
    // scene / cli
    SceneError,
};

inline const char* err_name(Err e) {
    switch (e) {
        case Err::NullInput: return "NullInput";
        case Err::OppositeOrientation: return "OppositeOrientation";
        case Err::DivisionNearZero: return "DivisionNearZero";
        case Err::DomainError: return "DomainError";
        case Err::OrderExceeded: return "OrderExceeded";
        case Err::SyntaxError: return "SyntaxError";
        case Err::UnknownIdentifier: return "UnknownIdentifier";
        case Err::NullVelocity: return "NullVelocity";
        case Err::VanishingCurvature: return "VanishingCurvature";
        case Err::NullPrincipalNormal: return "NullPrincipalNormal";
        case Err::DegeneratePatch: return "DegeneratePatch";
        case Err::FrameSignatureMismatch: return "FrameSignatureMismatch";
        case Err::LambdaZero: return "LambdaZero";
        case Err::OffsetSingular: return "OffsetSingular";
        case Err::UnclassifiableType: return "UnclassifiableType";
        case Err::CausalDrift: return "CausalDrift";
        case Err::ThetaDegenerate: return "ThetaDegenerate";
        case Err::NotAsymptotic: return "NotAsymptotic";
        case Err::SceneError: return "SceneError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& msg, long pos = -1)
        : std::runtime_error(std::string(err_name(code)) + ": " + msg),
          code(code), pos(pos) {}

    Err code;
    long pos;  // byte offset for parse errors, -1 otherwise
};

[[noreturn]] inline void raise(Err code, const std::string& msg, long pos = -1) {
    throw Error(code, msg, pos);
}

}  // namespace mink
