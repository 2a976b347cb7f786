#include <hforest/cnf.hpp>

#include <charconv>
#include <sstream>

namespace hforest::cnf {

std::string emit_dimacs(const CnfFormula& f)
{
    std::ostringstream out;
    for (const auto& m : f.var_map)
        out << "c map v " << m.vertex << ' ' << m.color << ' ' << m.var << '\n';
    out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const auto& clause : f.clauses) {
        for (Literal l : clause)
            out << l << ' ';
        out << "0\n";
    }
    return out.str();
}

namespace {

std::vector<std::string_view> split_words(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

long long to_int(std::string_view word, int line_no)
{
    long long value = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc() || ptr != word.data() + word.size())
        throw DimacsError("line " + std::to_string(line_no) + ": expected an integer, got '" + std::string(word) + "'");
    return value;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn)
{
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        fn(text.substr(pos, end - pos), ++line_no);
        pos = end + 1;
    }
}

} // namespace

CnfFormula parse_dimacs(std::string_view text)
{
    CnfFormula f;
    bool have_header = false;
    long long declared_clauses = 0;
    Clause current;
    bool open_clause = false;

    for_each_line(text, [&](std::string_view line, int line_no) {
        auto words = split_words(line);
        if (words.empty())
            return;
        if (words[0] == "c") {
            if (words.size() >= 2 && words[1] == "map") {
                if (words.size() != 6 || words[2] != "v")
                    throw DimacsError("line " + std::to_string(line_no) + ": expected 'c map v <vertex> <color> <var>'");
                f.var_map.push_back({static_cast<int>(to_int(words[3], line_no)),
                                     static_cast<int>(to_int(words[4], line_no)),
                                     static_cast<int>(to_int(words[5], line_no))});
            }
            return;
        }
        if (words[0] == "p") {
            if (have_header)
                throw DimacsError("line " + std::to_string(line_no) + ": second header");
            if (words.size() != 4 || words[1] != "cnf")
                throw DimacsError("line " + std::to_string(line_no) + ": header must be 'p cnf <vars> <clauses>'");
            const long long vars = to_int(words[2], line_no);
            declared_clauses = to_int(words[3], line_no);
            if (vars < 0 || declared_clauses < 0 || vars > 1'000'000'000)
                throw DimacsError("line " + std::to_string(line_no) + ": negative or oversized header counts");
            f.num_vars = static_cast<int>(vars);
            have_header = true;
            return;
        }
        if (words[0] == "%")
            return;
        if (!have_header)
            throw DimacsError("line " + std::to_string(line_no) + ": clause before 'p cnf' header");
        for (auto w : words) {
            const long long lit = to_int(w, line_no);
            if (lit == 0) {
                f.clauses.push_back(std::move(current));
                current.clear();
                open_clause = false;
                continue;
            }
            if (std::llabs(lit) > f.num_vars)
                throw DimacsError("line " + std::to_string(line_no) + ": literal " + std::to_string(lit) +
                                  " exceeds declared variable count " + std::to_string(f.num_vars));
            current.push_back(static_cast<Literal>(lit));
            open_clause = true;
        }
    });

    if (!have_header)
        throw DimacsError("missing 'p cnf' header");
    if (open_clause)
        throw DimacsError("last clause is missing its terminating 0");
    if (static_cast<long long>(f.clauses.size()) != declared_clauses)
        throw DimacsError("header declares " + std::to_string(declared_clauses) + " clauses, found " +
                          std::to_string(f.clauses.size()));
    for (const auto& m : f.var_map)
        if (m.var < 1 || m.var > f.num_vars)
            throw DimacsError("variable map entry " + std::to_string(m.var) + " outside 1.." +
                              std::to_string(f.num_vars));
    return f;
}

std::vector<bool> parse_model(std::string_view text, int num_vars)
{
    std::vector<bool> model(static_cast<std::size_t>(num_vars) + 1, false);
    for_each_line(text, [&](std::string_view line, int line_no) {
        auto words = split_words(line);
        if (words.empty())
            return;
        if (words[0] == "s") {
            if (words.size() >= 2 && words[1] != "SATISFIABLE")
                throw DimacsError("solver reported " + std::string(words[1]));
            return;
        }
        if (words[0] != "v")
            return;
        for (std::size_t i = 1; i < words.size(); ++i) {
            const long long lit = to_int(words[i], line_no);
            if (lit == 0)
                continue;
            if (std::llabs(lit) > num_vars)
                throw DimacsError("line " + std::to_string(line_no) + ": literal " + std::to_string(lit) +
                                  " exceeds variable count " + std::to_string(num_vars));
            model[static_cast<std::size_t>(std::llabs(lit))] = lit > 0;
        }
    });
    return model;
}

} // namespace hforest::cnf
