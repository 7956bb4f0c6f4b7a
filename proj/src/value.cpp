#include "slx/value.hpp"

#include "slx/render.hpp"

namespace slx {

std::string_view discipline_name(Discipline d) {
    return d == Discipline::Dynamic ? "DYNAMIC" : "LEXICAL";
}

std::string value_text(const Value& v) {
    if (const auto* n = std::get_if<std::int64_t>(&v)) return std::to_string(*n);
    if (const auto* r = std::get_if<RoutineValue>(&v)) return "<routine:" + r->name + ">";
    if (const auto* p = std::get_if<PromiseValue>(&v)) return render_expr(*p->expr);
    return "<unset>";
}

}  // namespace slx
