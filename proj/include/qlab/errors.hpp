#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace qlab {

// Exit-code classes for the CLI. Every library exception carries one.
enum class ErrorKind : int {
    Parse = 2,
    Data = 3,       // axiom/cocycle violations, bad parameters, failed preconditions
    SizeLimit = 4,
    NotAKnot = 5,
    NonIntegral = 6,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

struct ParseError : Error {
    explicit ParseError(const std::string& m) : Error(ErrorKind::Parse, m) {}
};
struct ShapeError : Error {
    explicit ShapeError(const std::string& m) : Error(ErrorKind::Data, "shape error: " + m) {}
};
struct InvalidParameter : Error {
    explicit InvalidParameter(const std::string& m) : Error(ErrorKind::Data, "invalid parameter: " + m) {}
};

// axiom: 1 idempotence, 2 right invertibility, 3 right self-distributivity.
// witness: the elements exhibiting the failure; unused slots are -1.
struct AxiomFailure {
    int axiom = 0;
    std::array<int, 3> witness{-1, -1, -1};
};

class AxiomViolation : public Error {
public:
    explicit AxiomViolation(const AxiomFailure& f)
        : Error(ErrorKind::Data, "axiom " + std::to_string(f.axiom) + " violated at (" +
                                     std::to_string(f.witness[0]) + "," + std::to_string(f.witness[1]) + "," +
                                     std::to_string(f.witness[2]) + ")"),
          failure_(f) {}
    const AxiomFailure& failure() const { return failure_; }

private:
    AxiomFailure failure_;
};

struct CocycleViolation : Error {
    explicit CocycleViolation(const std::string& m) : Error(ErrorKind::Data, "cocycle violation: " + m) {}
};
struct ConstantCocycleViolation : Error {
    explicit ConstantCocycleViolation(const std::string& m)
        : Error(ErrorKind::Data, "constant cocycle violation: " + m) {}
};
struct ModulusMismatch : Error {
    explicit ModulusMismatch(const std::string& m) : Error(ErrorKind::Data, "modulus mismatch: " + m) {}
};
struct BaseMismatch : Error {
    explicit BaseMismatch(const std::string& m) : Error(ErrorKind::Data, "base mismatch: " + m) {}
};
struct BaseNotKei : Error {
    explicit BaseNotKei(const std::string& m) : Error(ErrorKind::Data, "base not kei: " + m) {}
};
struct NotASubgroup : Error {
    explicit NotASubgroup(const std::string& m) : Error(ErrorKind::Data, "not a subgroup: " + m) {}
};
struct NoSuchClass : Error {
    explicit NoSuchClass(const std::string& m) : Error(ErrorKind::Data, "no such class: " + m) {}
};
struct NotConnected : Error {
    explicit NotConnected(const std::string& m) : Error(ErrorKind::Data, "not connected: " + m) {}
};
struct IsFaithful : Error {
    explicit IsFaithful(const std::string& m) : Error(ErrorKind::Data, "faithful: " + m) {}
};
struct FibersUnequal : Error {
    explicit FibersUnequal(const std::string& m) : Error(ErrorKind::Data, "fibers unequal: " + m) {}
};
struct PreconditionUnverified : Error {
    explicit PreconditionUnverified(const std::string& m)
        : Error(ErrorKind::Data, "precondition unverified: " + m) {}
};
struct NotCoprime : Error {
    explicit NotCoprime(const std::string& m) : Error(ErrorKind::Data, "not coprime: " + m) {}
};
struct SizeLimit : Error {
    explicit SizeLimit(const std::string& m) : Error(ErrorKind::SizeLimit, "size limit: " + m) {}
};
struct NotAKnot : Error {
    explicit NotAKnot(const std::string& m) : Error(ErrorKind::NotAKnot, "not a knot: " + m) {}
};
struct LetterOutOfRange : Error {
    explicit LetterOutOfRange(const std::string& m) : Error(ErrorKind::Parse, "letter out of range: " + m) {}
};
struct ZeroLetter : Error {
    explicit ZeroLetter(const std::string& m) : Error(ErrorKind::Parse, "zero letter: " + m) {}
};
struct MissingAnchor : Error {
    explicit MissingAnchor(const std::string& m) : Error(ErrorKind::Data, "missing anchor: " + m) {}
};
struct NonIntegralResult : Error {
    explicit NonIntegralResult(const std::string& m)
        : Error(ErrorKind::NonIntegral, "non-integral result: " + m) {}
};

}  // namespace qlab
