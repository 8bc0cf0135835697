#include "euclid/script.hpp"

#include <cctype>
#include <chrono>
#include <map>
#include <sstream>

namespace euclid::script {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::Syntax:
        return "syntax";
    case ErrorKind::Name:
        return "name";
    default:
        return "validation";
    }
}

ScriptError::ScriptError(ErrorKind kind, int line, int column, const std::string& message)
    : std::runtime_error(message)
    , kind_(kind)
    , line_(line)
    , column_(column)
{
}

std::string ScriptError::diagnostic() const
{
    return std::to_string(line_) + ":" + std::to_string(column_) + ": " +
           std::string(to_string(kind_)) + " error: " + what();
}

ObjectKind kind_of(const Object& object) noexcept
{
    return static_cast<ObjectKind>(object.index());
}

namespace {

struct OpName {
    Op op;
    std::string_view name;
};
constexpr OpName kOps[] = {
    {Op::LineThrough, "lineThrough"},     {Op::Midpoint, "midpoint"},
    {Op::PerpThrough2d, "perpThrough2d"}, {Op::PlaneFromPointLine, "planeFromPointLine"},
    {Op::PerpToPlane, "perpToPlane"},     {Op::CommonPerp, "commonPerp"},
    {Op::MeetLinePlane, "meetLinePlane"}, {Op::MeetPlanes, "meetPlanes"},
};

struct PredName {
    Pred pred;
    std::string_view name;
};
constexpr PredName kPreds[] = {
    {Pred::Equal, "equal"},         {Pred::OnLine, "onLine"},
    {Pred::InPlane, "inPlane"},     {Pred::LineInPlane, "lineInPlane"},
    {Pred::Parallel, "parallel"},   {Pred::Intersect, "intersect"},
    {Pred::SameSide, "sameSide"},
};

std::string_view kind_name(ObjectKind k)
{
    switch (k) {
    case ObjectKind::Point2:
        return "2D point";
    case ObjectKind::Point3:
        return "3D point";
    case ObjectKind::Line2:
        return "2D line";
    case ObjectKind::Line3:
        return "3D line";
    default:
        return "plane";
    }
}

} // namespace

std::string_view to_string(Op op) noexcept
{
    for (const auto& e : kOps)
        if (e.op == op)
            return e.name;
    return "?";
}

std::string_view to_string(Pred pred) noexcept
{
    for (const auto& e : kPreds)
        if (e.pred == pred)
            return e.name;
    return "?";
}

// --- Signatures ---------------------------------------------------------------

namespace {

using K = ObjectKind;
using Kinds = std::vector<ObjectKind>;

std::optional<ObjectKind> construct_result(Op op, const Kinds& a)
{
    auto is = [&a](std::initializer_list<ObjectKind> want) {
        return a.size() == want.size() && std::equal(a.begin(), a.end(), want.begin());
    };
    switch (op) {
    case Op::LineThrough:
        if (is({K::Point2, K::Point2}))
            return K::Line2;
        if (is({K::Point3, K::Point3}))
            return K::Line3;
        break;
    case Op::Midpoint:
        if (is({K::Point2, K::Point2}))
            return K::Point2;
        if (is({K::Point3, K::Point3}))
            return K::Point3;
        break;
    case Op::PerpThrough2d:
        if (is({K::Point2, K::Line2}))
            return K::Line2;
        break;
    case Op::PlaneFromPointLine:
        if (is({K::Point3, K::Line3}))
            return K::Plane;
        break;
    case Op::PerpToPlane:
        if (is({K::Point3, K::Plane}))
            return K::Line3;
        break;
    case Op::CommonPerp:
        if (is({K::Line3, K::Line3}))
            return K::Line3;
        break;
    case Op::MeetLinePlane:
        if (is({K::Line3, K::Plane}))
            return K::Point3;
        break;
    case Op::MeetPlanes:
        if (is({K::Plane, K::Plane}))
            return K::Line3;
        break;
    }
    return std::nullopt;
}

bool query_accepts(Pred pred, const Kinds& a)
{
    auto is = [&a](std::initializer_list<ObjectKind> want) {
        return a.size() == want.size() && std::equal(a.begin(), a.end(), want.begin());
    };
    switch (pred) {
    case Pred::Equal:
        return is({K::Point2, K::Point2}) || is({K::Point3, K::Point3});
    case Pred::OnLine:
        return is({K::Point2, K::Line2}) || is({K::Point3, K::Line3});
    case Pred::InPlane:
        return is({K::Point3, K::Plane});
    case Pred::LineInPlane:
        return is({K::Line3, K::Plane});
    case Pred::Parallel:
        return is({K::Line2, K::Line2}) || is({K::Line3, K::Line3}) ||
               is({K::Line3, K::Plane}) || is({K::Plane, K::Line3}) || is({K::Plane, K::Plane});
    case Pred::Intersect:
        return is({K::Line2, K::Line2}) || is({K::Line3, K::Line3});
    case Pred::SameSide:
        return is({K::Point2, K::Point2, K::Line2});
    }
    return false;
}

std::string describe(const Kinds& kinds)
{
    std::string out = "(";
    for (std::size_t i = 0; i < kinds.size(); ++i) {
        if (i)
            out += ", ";
        out += kind_name(kinds[i]);
    }
    return out + ")";
}

// --- Lexer --------------------------------------------------------------------

enum class Tok { Ident, Number, Punct, End };

struct Token {
    Tok kind;
    std::string text;
    int column;
};

std::vector<Token> lex(std::string_view line, int lineno)
{
    std::vector<Token> out;
    std::size_t i = 0;
    auto is_digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
    while (i < line.size()) {
        const char c = line[i];
        const int col = static_cast<int>(i) + 1;
        if (c == '#')
            break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < line.size() &&
                   (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_'))
                ++j;
            out.push_back({Tok::Ident, std::string(line.substr(i, j - i)), col});
            i = j;
            continue;
        }
        if (is_digit(c) || (c == '.' && i + 1 < line.size() && is_digit(line[i + 1]))) {
            std::size_t j = i;
            while (j < line.size() && is_digit(line[j]))
                ++j;
            if (j < line.size() && line[j] == '.') {
                ++j;
                while (j < line.size() && is_digit(line[j]))
                    ++j;
            }
            if (j < line.size() && (line[j] == 'e' || line[j] == 'E')) {
                std::size_t k = j + 1;
                if (k < line.size() && (line[k] == '+' || line[k] == '-'))
                    ++k;
                if (k < line.size() && is_digit(line[k])) {
                    while (k < line.size() && is_digit(line[k]))
                        ++k;
                    j = k;
                }
            }
            out.push_back({Tok::Number, std::string(line.substr(i, j - i)), col});
            i = j;
            continue;
        }
        if (std::string_view("()[],=:*+-").find(c) != std::string_view::npos) {
            out.push_back({Tok::Punct, std::string(1, c), col});
            ++i;
            continue;
        }
        throw ScriptError(ErrorKind::Syntax, lineno, col,
                          std::string("unexpected character '") + c + "'");
    }
    out.push_back({Tok::End, "", static_cast<int>(line.size()) + 1});
    return out;
}

// --- Parser -------------------------------------------------------------------

struct LinearTerm {
    Interval coefficient;
    char var; // 'x', 'y', 'z', or 0 for the constant term
    int column;
};

class StatementParser {
public:
    StatementParser(std::vector<Token> tokens, int line, std::map<std::string, ObjectKind>& names)
        : toks_(std::move(tokens))
        , line_(line)
        , names_(names)
    {
    }

    Statement parse()
    {
        const Token& head = peek();
        if (head.kind != Tok::Ident)
            fail(head, "expected a statement keyword");
        Statement s = [&]() -> Statement {
            if (head.text == "point")
                return parse_point();
            if (head.text == "line")
                return parse_line();
            if (head.text == "plane")
                return parse_plane();
            if (head.text == "construct")
                return parse_construct();
            if (head.text == "query")
                return parse_query();
            fail(head, "unknown statement '" + head.text + "'");
        }();
        if (peek().kind != Tok::End)
            fail(peek(), "unexpected '" + peek().text + "' after statement");
        return s;
    }

private:
    [[noreturn]] void fail(const Token& at, const std::string& msg, ErrorKind kind = ErrorKind::Syntax) const
    {
        throw ScriptError(kind, line_, at.column, msg);
    }

    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

    bool at_punct(char c) const { return peek().kind == Tok::Punct && peek().text[0] == c; }
    bool accept(char c)
    {
        if (!at_punct(c))
            return false;
        next();
        return true;
    }
    void expect(char c)
    {
        if (!accept(c))
            fail(peek(), std::string("expected '") + c + "'" +
                             (peek().kind == Tok::End ? " at end of line"
                                                      : ", found '" + peek().text + "'"));
    }
    const Token& expect_ident(const char* what)
    {
        if (peek().kind != Tok::Ident)
            fail(peek(), std::string("expected ") + what);
        return next();
    }
    void expect_word(const char* word)
    {
        if (peek().kind != Tok::Ident || peek().text != word)
            fail(peek(), std::string("expected '") + word + "'");
        next();
    }

    // Declares a fresh identifier.
    std::string declare(const Token& id)
    {
        if (names_.count(id.text))
            fail(id, "'" + id.text + "' is already defined", ErrorKind::Name);
        return id.text;
    }

    std::string signed_number()
    {
        std::string sign;
        if (at_punct('+') || at_punct('-'))
            sign = next().text;
        const Token& t = peek();
        if (t.kind == Tok::Number || (t.kind == Tok::Ident && (t.text == "inf" || t.text == "infinity"))) {
            next();
            return sign + t.text;
        }
        fail(t, "expected a number");
    }

    template <class F>
    auto validated(const Token& at, F make)
    {
        try {
            return make();
        } catch (const ValidationError& e) {
            fail(at, e.what(), ErrorKind::Validation);
        } catch (const std::invalid_argument& e) {
            fail(at, e.what(), ErrorKind::Validation);
        }
    }

    Interval interval()
    {
        const Token start = peek();
        if (accept('[')) {
            const std::string lo = signed_number();
            expect(',');
            const std::string hi = signed_number();
            expect(']');
            try {
                return Interval(parse_decimal_down(lo), parse_decimal_up(hi));
            } catch (const std::invalid_argument& e) {
                fail(start, std::string("bad interval literal: ") + e.what());
            }
        }
        const std::string v = signed_number();
        try {
            return parse_decimal(v);
        } catch (const std::invalid_argument& e) {
            fail(start, std::string("bad number: ") + e.what());
        }
    }

    std::vector<LinearTerm> linear_form()
    {
        std::vector<LinearTerm> terms;
        bool negate = false;
        if (at_punct('+') || at_punct('-'))
            negate = next().text == "-";
        while (true) {
            const int col = peek().column;
            Interval coef = interval();
            if (negate)
                coef = -coef;
            char var = 0;
            if (accept('*')) {
                const Token& v = expect_ident("a variable x, y or z");
                if (v.text != "x" && v.text != "y" && v.text != "z")
                    fail(v, "expected a variable x, y or z, found '" + v.text + "'");
                var = v.text[0];
            }
            terms.push_back({coef, var, col});
            if (at_punct('+') || at_punct('-')) {
                negate = next().text == "-";
                continue;
            }
            return terms;
        }
    }

    void expect_terms(const std::vector<LinearTerm>& terms, std::string_view vars, bool constant_allowed,
                      const Token& at)
    {
        std::size_t expected = vars.size();
        const bool has_constant = constant_allowed && terms.size() == expected + 1 && terms.back().var == 0;
        if (terms.size() != expected + (has_constant ? 1 : 0))
            fail(at, "expected terms in " + std::string(vars));
        for (std::size_t i = 0; i < expected; ++i)
            if (terms[i].var != vars[i])
                fail(at, std::string("expected the ") + vars[i] + " term in position " +
                             std::to_string(i + 1));
    }

    Definition parse_point()
    {
        next();
        const std::string id = declare(expect_ident("a point name"));
        expect('=');
        const Token open = peek();
        expect('(');
        std::vector<Interval> coords{interval()};
        while (accept(','))
            coords.push_back(interval());
        expect(')');
        if (coords.size() != 2 && coords.size() != 3)
            fail(open, "a point has 2 or 3 coordinates");
        Object obj = validated(open, [&]() -> Object {
            if (coords.size() == 2)
                return Point2(coords[0], coords[1]);
            return Point3(coords[0], coords[1], coords[2]);
        });
        names_[id] = kind_of(obj);
        return {id, std::move(obj)};
    }

    std::array<Interval, 3> triple()
    {
        expect('(');
        std::array<Interval, 3> v{interval(), Interval(), Interval()};
        expect(',');
        v[1] = interval();
        expect(',');
        v[2] = interval();
        expect(')');
        return v;
    }

    Definition parse_line()
    {
        next();
        const std::string id = declare(expect_ident("a line name"));
        expect(':');
        const Token body = peek();
        if (body.kind == Tok::Ident && body.text == "anchor") {
            next();
            expect('=');
            const auto p = triple();
            expect_word("dir");
            expect('=');
            const auto d = triple();
            Object obj = validated(body, [&]() -> Object {
                return Line3(Point3(p[0], p[1], p[2]), Vec3{d[0], d[1], d[2]});
            });
            names_[id] = ObjectKind::Line3;
            return {id, std::move(obj)};
        }
        const auto terms = linear_form();
        expect_terms(terms, "xy", false, body);
        expect('=');
        const Interval rhs = interval();
        Object obj = validated(body, [&]() -> Object {
            return Line2(terms[0].coefficient, terms[1].coefficient, rhs);
        });
        names_[id] = ObjectKind::Line2;
        return {id, std::move(obj)};
    }

    Definition parse_plane()
    {
        next();
        const std::string id = declare(expect_ident("a plane name"));
        expect(':');
        const Token body = peek();
        const auto terms = linear_form();
        expect_terms(terms, "xyz", true, body);
        expect('=');
        const Token rhs_at = peek();
        if (!interval().is_zero())
            fail(rhs_at, "a plane equation must have 0 on the right-hand side");
        const Interval d = terms.size() == 4 ? terms[3].coefficient : Interval(0.0);
        Object obj = validated(body, [&]() -> Object {
            return Plane(terms[0].coefficient, terms[1].coefficient, terms[2].coefficient, d);
        });
        names_[id] = ObjectKind::Plane;
        return {id, std::move(obj)};
    }

    std::vector<std::string> arguments(Kinds& kinds)
    {
        expect('(');
        std::vector<std::string> args;
        if (!at_punct(')')) {
            do {
                const Token& arg = expect_ident("an object name");
                const auto it = names_.find(arg.text);
                if (it == names_.end())
                    fail(arg, "'" + arg.text + "' is not defined", ErrorKind::Name);
                args.push_back(arg.text);
                kinds.push_back(it->second);
            } while (accept(','));
        }
        expect(')');
        return args;
    }

    ConstructStatement parse_construct()
    {
        next();
        const Token id_tok = expect_ident("a name for the constructed object");
        const std::string id = declare(id_tok);
        expect('=');
        const Token op_tok = expect_ident("a construction");
        std::optional<Op> op;
        for (const auto& e : kOps)
            if (e.name == op_tok.text)
                op = e.op;
        if (!op)
            fail(op_tok, "unknown construction '" + op_tok.text + "'");
        Kinds kinds;
        auto args = arguments(kinds);
        const auto result = construct_result(*op, kinds);
        if (!result)
            fail(op_tok, op_tok.text + " does not accept " + describe(kinds));
        names_[id] = *result;
        return {id, *op, std::move(args), *result};
    }

    QueryStatement parse_query()
    {
        next();
        const Token pred_tok = expect_ident("a predicate");
        std::optional<Pred> pred;
        for (const auto& e : kPreds)
            if (e.name == pred_tok.text)
                pred = e.pred;
        if (!pred)
            fail(pred_tok, "unknown predicate '" + pred_tok.text + "'");
        Kinds kinds;
        auto args = arguments(kinds);
        if (!query_accepts(*pred, kinds))
            fail(pred_tok, pred_tok.text + " does not accept " + describe(kinds));
        return {*pred, std::move(args)};
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    int line_;
    std::map<std::string, ObjectKind>& names_;
};

} // namespace

Program parse(std::string_view text)
{
    Program program;
    std::map<std::string, ObjectKind> names;
    int lineno = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        ++lineno;
        auto tokens = lex(line, lineno);
        if (tokens.front().kind != Tok::End) {
            StatementParser parser(std::move(tokens), lineno, names);
            program.statements.push_back(parser.parse());
            program.source_lines.push_back(lineno);
        }
        if (end == text.size())
            break;
        start = end + 1;
    }
    return program;
}

// --- Printing -----------------------------------------------------------------

namespace {

// A singleton prints as a bare scalar when that scalar converts back to it.
std::string literal(const Interval& i)
{
    if (i.is_singleton()) {
        const std::string s = format_lower(i.lo());
        if (parse_decimal(s) == i)
            return s;
    }
    return format_interval(i);
}

std::string term(const Interval& coef, const char* var, bool first)
{
    const bool negative = coef.hi() <= 0 && !coef.is_zero();
    std::string out;
    if (negative)
        out = first ? "-" : " - ";
    else if (!first)
        out = " + ";
    out += literal(negative ? -coef : coef);
    if (*var)
        out += std::string("*") + var;
    return out;
}

std::string tuple(std::initializer_list<Interval> items)
{
    std::string out = "(";
    bool first = true;
    for (const auto& i : items) {
        if (!first)
            out += ", ";
        out += literal(i);
        first = false;
    }
    return out + ")";
}

std::string box_text(const Point2& p)
{
    return "x=" + format_interval(p.x()) + " y=" + format_interval(p.y());
}

std::string call_text(std::string_view name, const std::vector<std::string>& args)
{
    std::string out(name);
    out += "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i)
            out += ", ";
        out += args[i];
    }
    return out + ")";
}

struct ObjectPrinter {
    const std::string& id;

    std::string operator()(const Point2& p) const
    {
        return "point " + id + " = " + tuple({p.x(), p.y()});
    }
    std::string operator()(const Point3& p) const
    {
        return "point " + id + " = " + tuple({p.x(), p.y(), p.z()});
    }
    std::string operator()(const Line2& l) const
    {
        return "line " + id + ": " + term(l.a(), "x", true) + term(l.b(), "y", false) + " = " +
               literal(l.c());
    }
    std::string operator()(const Line3& l) const
    {
        const auto& p = l.anchor();
        const auto& d = l.dir();
        return "line " + id + ": anchor=" + tuple({p.x(), p.y(), p.z()}) +
               " dir=" + tuple({d.x, d.y, d.z});
    }
    std::string operator()(const Plane& pl) const
    {
        return "plane " + id + ": " + term(pl.a(), "x", true) + term(pl.b(), "y", false) +
               term(pl.c(), "z", false) + term(pl.d(), "", false) + " = 0";
    }
};

} // namespace

std::string print_object(const std::string& id, const Object& object)
{
    return std::visit(ObjectPrinter{id}, object);
}

std::string print_statement(const Statement& statement)
{
    struct Printer {
        std::string operator()(const Definition& d) const { return print_object(d.id, d.object); }
        std::string operator()(const ConstructStatement& c) const
        {
            return "construct " + c.id + " = " + call_text(to_string(c.op), c.args);
        }
        std::string operator()(const QueryStatement& q) const
        {
            return "query " + call_text(to_string(q.pred), q.args);
        }
    };
    return std::visit(Printer{}, statement);
}

std::string print(const Program& program)
{
    std::string out;
    for (const auto& s : program.statements)
        out += print_statement(s) + "\n";
    return out;
}

// --- Execution ---------------------------------------------------------------

std::vector<QueryEntry> Report::queries() const
{
    std::vector<QueryEntry> out;
    for (const auto& e : entries)
        if (const auto* q = std::get_if<QueryEntry>(&e))
            out.push_back(*q);
    return out;
}

namespace {

using Args = std::vector<const Object*>;

template <class T>
const T& arg(const Args& a, std::size_t i)
{
    return std::get<T>(*a[i]);
}

template <class T>
std::variant<Object, Disabled> lift(const Construction<T>& c)
{
    if (c.built())
        return Object(c.value());
    return c.reason();
}

std::variant<Object, Disabled> run_construct(Op op, const Args& a)
{
    const ObjectKind k0 = kind_of(*a[0]);
    switch (op) {
    case Op::LineThrough:
        if (k0 == K::Point2)
            return lift(line_through(arg<Point2>(a, 0), arg<Point2>(a, 1)));
        return lift(line_through(arg<Point3>(a, 0), arg<Point3>(a, 1)));
    case Op::Midpoint:
        if (k0 == K::Point2)
            return Object(midpoint(arg<Point2>(a, 0), arg<Point2>(a, 1)));
        return Object(midpoint(arg<Point3>(a, 0), arg<Point3>(a, 1)));
    case Op::PerpThrough2d:
        return Object(perpendicular_through(arg<Point2>(a, 0), arg<Line2>(a, 1)));
    case Op::PlaneFromPointLine:
        return lift(plane_from_point_line(arg<Point3>(a, 0), arg<Line3>(a, 1)));
    case Op::PerpToPlane:
        return Object(perpendicular_to_plane(arg<Point3>(a, 0), arg<Plane>(a, 1)));
    case Op::CommonPerp:
        return lift(common_perpendicular(arg<Line3>(a, 0), arg<Line3>(a, 1)));
    case Op::MeetLinePlane:
        return lift(meet_line_plane(arg<Line3>(a, 0), arg<Plane>(a, 1)));
    case Op::MeetPlanes:
        return lift(meet_planes(arg<Plane>(a, 0), arg<Plane>(a, 1)));
    }
    return Disabled{"unknown construction", Truth::Undetermined};
}

struct QueryOutcome {
    Truth verdict;
    std::optional<Point2> box;
};

QueryOutcome run_query(Pred pred, const Args& a, const PredicateOptions& opt)
{
    const ObjectKind k0 = kind_of(*a[0]);
    const ObjectKind k1 = kind_of(*a[1]);
    switch (pred) {
    case Pred::Equal:
        if (k0 == K::Point2)
            return {points_equal(arg<Point2>(a, 0), arg<Point2>(a, 1)), {}};
        return {points_equal(arg<Point3>(a, 0), arg<Point3>(a, 1)), {}};
    case Pred::OnLine:
        if (k0 == K::Point2)
            return {on_line(arg<Point2>(a, 0), arg<Line2>(a, 1), opt), {}};
        return {on_line(arg<Point3>(a, 0), arg<Line3>(a, 1)), {}};
    case Pred::InPlane:
        return {in_plane(arg<Point3>(a, 0), arg<Plane>(a, 1), opt), {}};
    case Pred::LineInPlane:
        return {line_in_plane(arg<Line3>(a, 0), arg<Plane>(a, 1), opt), {}};
    case Pred::Parallel:
        if (k0 == K::Line2)
            return {parallel(arg<Line2>(a, 0), arg<Line2>(a, 1)), {}};
        if (k0 == K::Line3 && k1 == K::Line3)
            return {parallel(arg<Line3>(a, 0), arg<Line3>(a, 1)), {}};
        if (k0 == K::Line3)
            return {parallel(arg<Line3>(a, 0), arg<Plane>(a, 1)), {}};
        if (k1 == K::Line3)
            return {parallel(arg<Plane>(a, 0), arg<Line3>(a, 1)), {}};
        return {parallel(arg<Plane>(a, 0), arg<Plane>(a, 1)), {}};
    case Pred::Intersect:
        if (k0 == K::Line2) {
            auto r = lines_intersect(arg<Line2>(a, 0), arg<Line2>(a, 1));
            return {r.verdict, r.box};
        }
        return {lines_intersect(arg<Line3>(a, 0), arg<Line3>(a, 1)), {}};
    case Pred::SameSide:
        return {same_side(arg<Point2>(a, 0), arg<Point2>(a, 1), arg<Line2>(a, 2)), {}};
    }
    return {Truth::Undetermined, {}};
}

} // namespace

Report execute(const Program& program, const ExecuteOptions& options)
{
    Report report;
    std::map<std::string, Object> env;
    std::map<std::string, std::string> unavailable;
    std::size_t query_index = 0;

    // Resolves arguments, or names the first unavailable one.
    auto resolve = [&](const std::vector<std::string>& names, Args& out) -> std::optional<std::string> {
        for (const auto& n : names) {
            if (auto u = unavailable.find(n); u != unavailable.end())
                return n + " is unavailable (" + u->second + ")";
            out.push_back(&env.at(n));
        }
        return std::nullopt;
    };

    for (const auto& statement : program.statements) {
        if (const auto* def = std::get_if<Definition>(&statement)) {
            env.emplace(def->id, def->object);
            continue;
        }
        if (const auto* c = std::get_if<ConstructStatement>(&statement)) {
            ConstructionEntry entry;
            entry.id = c->id;
            entry.text = c->id + " = " + call_text(to_string(c->op), c->args);
            Args args;
            if (auto missing = resolve(c->args, args)) {
                entry.aborted = *missing;
                unavailable.emplace(c->id, "depends on an unavailable object");
            } else {
                auto outcome = run_construct(c->op, args);
                if (auto* obj = std::get_if<Object>(&outcome)) {
                    entry.object = *obj;
                    env.emplace(c->id, std::move(*obj));
                } else {
                    const auto& d = std::get<Disabled>(outcome);
                    entry.disabled = d;
                    unavailable.emplace(c->id, std::string(to_string(c->op)) + " disabled: " +
                                                   d.condition + " = " +
                                                   std::string(to_string(d.verdict)));
                }
            }
            report.entries.emplace_back(std::move(entry));
            continue;
        }
        const auto& q = std::get<QueryStatement>(statement);
        QueryEntry entry;
        entry.index = ++query_index;
        entry.text = call_text(to_string(q.pred), q.args);
        Args args;
        if (auto missing = resolve(q.args, args)) {
            entry.aborted = *missing;
        } else {
            const auto t0 = std::chrono::steady_clock::now();
            auto outcome = run_query(q.pred, args, options.predicates);
            const auto t1 = std::chrono::steady_clock::now();
            entry.duration_us =
                std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
            entry.verdict = outcome.verdict;
            entry.box = std::move(outcome.box);
        }
        report.entries.emplace_back(std::move(entry));
    }
    return report;
}

std::string format_report(const Report& report, const ReportStyle& style)
{
    std::ostringstream os;
    bool first = true;
    for (const auto& e : report.entries) {
        if (!first)
            os << '\n';
        first = false;
        if (const auto* c = std::get_if<ConstructionEntry>(&e)) {
            os << "construct " << c->text << '\n';
            if (c->object)
                os << "object: " << print_object(c->id, *c->object) << '\n';
            else if (c->disabled)
                os << "disabled: " << c->disabled->condition << " = "
                   << to_string(c->disabled->verdict) << '\n';
            else if (c->aborted)
                os << "aborted: " << *c->aborted << '\n';
            continue;
        }
        const auto& q = std::get<QueryEntry>(e);
        os << "query " << q.index << ": " << q.text << '\n';
        if (style.durations)
            os << "duration_us: " << q.duration_us << '\n';
        os << "result: " << to_string(q.verdict) << '\n';
        if (q.box)
            os << "box: " << box_text(*q.box) << '\n';
        if (q.aborted)
            os << "aborted: " << *q.aborted << '\n';
    }
    return os.str();
}

} // namespace euclid::script
