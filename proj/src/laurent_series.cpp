#include "kkv/laurent_series.hpp"

namespace kkv {

std::string to_string(Variable v)
{
    switch (v) {
    case Variable::u:
        return "u";
    case Variable::q:
        return "q";
    case Variable::t:
        return "t";
    }
    return "?";
}

Variable parse_variable(std::string_view name)
{
    if (name == "u") {
        return Variable::u;
    }
    if (name == "q") {
        return Variable::q;
    }
    if (name == "t") {
        return Variable::t;
    }
    throw DomainError("unknown series variable '" + std::string(name) + "'");
}

} // namespace kkv
