#pragma once

#include <stdexcept>
#include <string>

namespace avec {

// Base class for all domain errors raised by the toolkit.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define AVEC_DEFINE_ERROR(NAME)                                   \
    class NAME : public Error {                                   \
    public:                                                       \
        explicit NAME(const std::string& msg) : Error(msg) {}     \
    }

AVEC_DEFINE_ERROR(LoopEdge);
AVEC_DEFINE_ERROR(DuplicateEdge);
AVEC_DEFINE_ERROR(VertexOutOfRange);
AVEC_DEFINE_ERROR(OrderTooSmall);
AVEC_DEFINE_ERROR(Disconnected);
AVEC_DEFINE_ERROR(NotATree);
AVEC_DEFINE_ERROR(IsATree);
AVEC_DEFINE_ERROR(NegativeWeight);
AVEC_DEFINE_ERROR(NotNormalized);
AVEC_DEFINE_ERROR(DomainMismatch);
AVEC_DEFINE_ERROR(EdgeNotInGraph);
AVEC_DEFINE_ERROR(ArgumentOutOfRange);
AVEC_DEFINE_ERROR(TooManyEdges);
AVEC_DEFINE_ERROR(ScopeTooLarge);
AVEC_DEFINE_ERROR(ParseError);
AVEC_DEFINE_ERROR(CaseUnsupported);
AVEC_DEFINE_ERROR(ComplementDisconnected);

#undef AVEC_DEFINE_ERROR

}  // namespace avec
