/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PRC_ERRORS_HH
#define PRC_ERRORS_HH 1

#include <stdexcept>
#include <string>
#include <string_view>

namespace prc
{
    enum class ErrorKind
    {
        IndexOutOfRange,
        SelfLoop,
        MalformedRecord,
        UnsupportedSize,
        OverlappingSets,
        EmptySet,
        TooLarge,
        BadParams,
        NoPartition
    };

    auto to_string(ErrorKind kind) -> std::string_view;

    class Error : public std::runtime_error
    {
        private:
            ErrorKind _kind;

        public:
            Error(ErrorKind kind, const std::string & message);

            auto kind() const -> ErrorKind { return _kind; }
    };
}

#endif
