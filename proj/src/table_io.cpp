#include "sfactor/table_io.hpp"

#include <fstream>
#include <sstream>

namespace sfactor {

FiniteGroup load_group_table(std::istream& in, const std::string& name) {
    std::string line;
    if (!std::getline(in, line) || line != "group-table v1")
        throw Error(errc::bad_format, "expected header 'group-table v1'");
    long n = 0;
    {
        if (!std::getline(in, line)) throw Error(errc::bad_format, "missing order line");
        std::istringstream ss(line);
        std::string kw;
        if (!(ss >> kw >> n) || kw != "order" || n < 1)
            throw Error(errc::bad_format, "expected 'order <n>'");
    }
    std::vector<std::vector<int>> raw(n, std::vector<int>(n));
    for (long r = 0; r < n; ++r) {
        if (!std::getline(in, line)) throw Error(errc::bad_format, "table row missing");
        std::istringstream ss(line);
        for (long c = 0; c < n; ++c)
            if (!(ss >> raw[r][c])) throw Error(errc::bad_format, "table row too short");
    }
    std::vector<std::string> labels;
    if (std::getline(in, line) && line.rfind("labels ", 0) == 0) {
        std::string rest = line.substr(7);
        size_t start = 0;
        while (true) {
            size_t comma = rest.find(',', start);
            labels.push_back(rest.substr(start, comma == std::string::npos ? comma : comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (static_cast<long>(labels.size()) != n)
            throw Error(errc::bad_format, "labels line has wrong count");
    }
    return validate_table(raw, std::move(labels), name);
}

FiniteGroup load_group_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(errc::bad_format, "cannot open group table file '" + path + "'");
    return load_group_table(in, path);
}

void save_group_table(const FiniteGroup& g, std::ostream& out) {
    out << "group-table v1\n";
    out << "order " << g.order << "\n";
    for (int a = 0; a < g.order; ++a) {
        for (int b = 0; b < g.order; ++b) {
            if (b) out << ' ';
            out << g.mul(a, b);
        }
        out << "\n";
    }
    out << "labels ";
    for (int a = 0; a < g.order; ++a) {
        if (a) out << ',';
        out << g.labels[a];
    }
    out << "\n";
}

}  // namespace sfactor
