#pragma once

#include <stdexcept>
#include <string>

namespace flatspin {

enum class Errc {
    DivisionByZero,
    NonConvexPolygon,
    EdgeVectorMismatch,
    UnmatchedEdge,
    Disconnected,
    InvalidK,
    OddN,
    EvenN,
    AngleSumMismatch,
    DegenerateTriangle,
    NotRhombusSurface,
    NotAutomorphism,
    NotInvolution,
    Internal,
};

const char* errc_name(Errc c);

/// Library error carrying a machine-checkable code.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what);
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

} // namespace flatspin
