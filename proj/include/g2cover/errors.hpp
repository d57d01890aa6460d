#pragma once

#include <stdexcept>
#include <string>

namespace g2cover {

// Every failure raised by the library derives from Error so callers can
// catch the whole family at a boundary (the CLI maps it to exit code 2).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
    virtual const char* kind() const noexcept { return "Error"; }
};

#define G2COVER_DEFINE_ERROR(Name)                                        \
    class Name : public Error {                                           \
    public:                                                               \
        explicit Name(const std::string& what) : Error(what) {}           \
        const char* kind() const noexcept override { return #Name; }      \
    }

G2COVER_DEFINE_ERROR(ParseError);
G2COVER_DEFINE_ERROR(DivisionError);
G2COVER_DEFINE_ERROR(UndefinedGcd);
G2COVER_DEFINE_ERROR(UndefinedResultant);
G2COVER_DEFINE_ERROR(UndefinedDiscriminant);
G2COVER_DEFINE_ERROR(UndefinedDecomposition);
G2COVER_DEFINE_ERROR(VariableMismatch);
G2COVER_DEFINE_ERROR(NotGenusTwo);
G2COVER_DEFINE_ERROR(AbsoluteUndefined);
G2COVER_DEFINE_ERROR(AUndefined);
G2COVER_DEFINE_ERROR(DegenerateParameters);
G2COVER_DEFINE_ERROR(NonGenericParameters);
G2COVER_DEFINE_ERROR(StructureError);
G2COVER_DEFINE_ERROR(SingularCurve);
G2COVER_DEFINE_ERROR(UnsupportedDegree);
G2COVER_DEFINE_ERROR(ArityError);
G2COVER_DEFINE_ERROR(MultipleRoots);
G2COVER_DEFINE_ERROR(BankIntegrityError);

#undef G2COVER_DEFINE_ERROR

}  // namespace g2cover
