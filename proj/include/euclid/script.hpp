#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "euclid/geometry.hpp"

namespace euclid::script {

enum class ErrorKind { Syntax, Name, Validation };

std::string_view to_string(ErrorKind kind) noexcept;

/// A diagnostic from parse(). Line and column are 1-based.
class ScriptError : public std::runtime_error {
public:
    ScriptError(ErrorKind kind, int line, int column, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }
    /// `line:column: <kind> error: message`
    std::string diagnostic() const;

private:
    ErrorKind kind_;
    int line_;
    int column_;
};

using Object = std::variant<Point2, Point3, Line2, Line3, Plane>;

enum class ObjectKind { Point2, Point3, Line2, Line3, Plane };

ObjectKind kind_of(const Object& object) noexcept;

enum class Op {
    LineThrough,
    Midpoint,
    PerpThrough2d,
    PlaneFromPointLine,
    PerpToPlane,
    CommonPerp,
    MeetLinePlane,
    MeetPlanes,
};

enum class Pred { Equal, OnLine, InPlane, LineInPlane, Parallel, Intersect, SameSide };

std::string_view to_string(Op op) noexcept;
std::string_view to_string(Pred pred) noexcept;

struct Definition {
    std::string id;
    Object object;
    friend bool operator==(const Definition&, const Definition&) = default;
};

struct ConstructStatement {
    std::string id;
    Op op;
    std::vector<std::string> args;
    ObjectKind result;
    friend bool operator==(const ConstructStatement&, const ConstructStatement&) = default;
};

struct QueryStatement {
    Pred pred;
    std::vector<std::string> args;
    friend bool operator==(const QueryStatement&, const QueryStatement&) = default;
};

using Statement = std::variant<Definition, ConstructStatement, QueryStatement>;

/// A parsed script. Identifiers are defined before use and never
/// redefined; argument kinds have been checked.
struct Program {
    std::vector<Statement> statements;
    std::vector<int> source_lines; // parallel to statements

    friend bool operator==(const Program& a, const Program& b)
    {
        return a.statements == b.statements;
    }
};

/// Throws ScriptError on the first malformed, ill-named, or degenerate
/// statement.
Program parse(std::string_view text);

/// Script text that parses back to the same program.
std::string print(const Program& program);

/// One statement as script text, e.g. `point P = (0, [0.5, 1])`.
std::string print_statement(const Statement& statement);

/// An object as a definition line named `id`.
std::string print_object(const std::string& id, const Object& object);

// --- Execution ---------------------------------------------------------------

struct ExecuteOptions {
    PredicateOptions predicates{};
};

struct ConstructionEntry {
    std::string id;
    std::string text;
    std::optional<Object> object;
    std::optional<Disabled> disabled;
    /// Set when an argument was itself unavailable.
    std::optional<std::string> aborted;
};

struct QueryEntry {
    std::size_t index = 0; // 1-based position among queries
    std::string text;
    std::int64_t duration_us = 0;
    Truth verdict = Truth::Undetermined;
    std::optional<Point2> box;
    std::optional<std::string> aborted;
};

using ReportEntry = std::variant<ConstructionEntry, QueryEntry>;

struct Report {
    std::vector<ReportEntry> entries;

    std::vector<QueryEntry> queries() const;
};

/// Runs statements in order. A disabled construction leaves its identifier
/// unavailable; statements that use it are recorded as aborted and queries
/// report undetermined.
Report execute(const Program& program, const ExecuteOptions& options = {});

struct ReportStyle {
    bool durations = true;
};

std::string format_report(const Report& report, const ReportStyle& style = {});

} // namespace euclid::script
