/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <prc/errors.hh>

using namespace prc;

auto prc::to_string(ErrorKind kind) -> std::string_view
{
    switch (kind) {
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::SelfLoop:        return "SelfLoop";
        case ErrorKind::MalformedRecord: return "MalformedRecord";
        case ErrorKind::UnsupportedSize: return "UnsupportedSize";
        case ErrorKind::OverlappingSets: return "OverlappingSets";
        case ErrorKind::EmptySet:        return "EmptySet";
        case ErrorKind::TooLarge:        return "TooLarge";
        case ErrorKind::BadParams:       return "BadParams";
        case ErrorKind::NoPartition:     return "NoPartition";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string & message) :
    std::runtime_error(std::string{to_string(kind)} + ": " + message),
    _kind(kind)
{
}
