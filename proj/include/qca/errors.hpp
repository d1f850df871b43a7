#pragma once

#include <stdexcept>
#include <string>

namespace qca {

// Base of every error raised by the library. kind() is the stable name used
// in CLI/JSON error objects.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define QCA_ERROR(Name)                                                        \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(#Name, what) {}         \
    }

QCA_ERROR(ParseError);
QCA_ERROR(NotDivisible);
QCA_ERROR(FrozenMutation);
QCA_ERROR(UnknownVertex);
QCA_ERROR(GlueNonFrozen);
QCA_ERROR(DuplicateGlueTarget);
QCA_ERROR(InvalidQuiver);
QCA_ERROR(NotReduced);
QCA_ERROR(NotLongest);
QCA_ERROR(SeedMismatch);
QCA_ERROR(MixedWeight);
QCA_ERROR(NotLaurent);
QCA_ERROR(NonCasimirRelation);
QCA_ERROR(NotAutomorphism);
QCA_ERROR(EnumerationBound);
QCA_ERROR(NotPositive);
QCA_ERROR(NotInvertible);

#undef QCA_ERROR

}  // namespace qca
