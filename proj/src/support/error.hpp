#ifndef SEMNET_SUPPORT_ERROR_HPP
#define SEMNET_SUPPORT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace semnet {

enum class ErrorCode {
    UnknownRelation,
    UnknownObject,
    UnknownNode,
    UnknownPrefix,
    ParseError,
    ResourceMismatch,
    IncompleteReification,
    EmptyInput,
    FixtureError,
    InvalidData,
    IoError,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::UnknownRelation: return "UnknownRelation";
        case ErrorCode::UnknownObject: return "UnknownObject";
        case ErrorCode::UnknownNode: return "UnknownNode";
        case ErrorCode::UnknownPrefix: return "UnknownPrefix";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ResourceMismatch: return "ResourceMismatch";
        case ErrorCode::IncompleteReification: return "IncompleteReification";
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::FixtureError: return "FixtureError";
        case ErrorCode::InvalidData: return "InvalidData";
        case ErrorCode::IoError: return "IoError";
    }
    return "Error";
}

} // namespace semnet

#endif
