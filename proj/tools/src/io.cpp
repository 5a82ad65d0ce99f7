#include "stabctab/cli/io.hpp"

#include "stabctab/error.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace stabctab::io {

using nlohmann::json;

namespace {

json parse_json(std::string_view text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(what + ": " + e.what());
    }
}

const json& field(const json& obj, const char* key, const std::string& what) {
    if (!obj.is_object() || !obj.contains(key)) throw ParseError(what + ": missing field \"" + key + "\"");
    return obj.at(key);
}

int as_int(const json& v, const std::string& what) {
    if (!v.is_number_integer()) throw ParseError(what + " must be an integer");
    return v.get<int>();
}

std::int64_t as_i64(const json& v, const std::string& what) {
    if (!v.is_number_integer()) throw ParseError(what + " must be an integer");
    return v.get<std::int64_t>();
}

std::string as_string(const json& v, const std::string& what) {
    if (!v.is_string()) throw ParseError(what + " must be a string");
    return v.get<std::string>();
}

BranchSet branch_set_from(const json& j, const std::string& what) {
    BranchSet b;
    if (j.contains("truncation")) {
        const int t = as_int(j.at("truncation"), what + ".truncation");
        if (t < 1) throw ParseError(what + ".truncation must be positive");
        b.declared_truncation = t;
    }
    const json& list = field(j, "branches", what);
    if (!list.is_array()) throw ParseError(what + ".branches must be an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string here = what + ".branches[" + std::to_string(i) + "]";
        b.branches.push_back({parse_unipoly(as_string(field(list[i], "x", here), here + ".x")),
                              parse_unipoly(as_string(field(list[i], "y", here), here + ".y"))});
    }
    return b;
}

DivisorClass int_vector(const json& v, const std::string& what) {
    if (!v.is_array()) throw ParseError(what + " must be an array of integers");
    DivisorClass out;
    for (const auto& x : v) out.push_back(as_i64(x, what + " entry"));
    return out;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

GermRecord parse_germ_record(std::string_view json_line) {
    const json j = parse_json(json_line, "germ record");
    GermRecord r;
    r.name = as_string(field(j, "name", "germ record"), "name");
    const std::string what = "germ " + r.name;
    r.poly = as_string(field(j, "poly", what), what + ".poly");
    if (j.contains("branches")) r.branches = branch_set_from(j, what);
    if (j.contains("expected")) {
        const json& e = j.at("expected");
        ExpectedInvariants x;
        x.mu = as_int(field(e, "mu", what + ".expected"), what + ".expected.mu");
        x.tau = as_int(field(e, "tau", what + ".expected"), what + ".expected.tau");
        if (e.contains("delta")) x.delta = as_int(e.at("delta"), what + ".expected.delta");
        if (e.contains("r")) x.r = as_int(e.at("r"), what + ".expected.r");
        r.expected = x;
    }
    return r;
}

std::vector<GermRecord> load_germ_corpus(const std::filesystem::path& path) {
    std::istringstream in(read_file(path));
    std::vector<GermRecord> out;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        try {
            out.push_back(parse_germ_record(line));
        } catch (const ParseError& e) {
            throw ParseError(path.string() + ":" + std::to_string(number) + ": " + e.what());
        }
    }
    return out;
}

BranchSet parse_branch_set(std::string_view json_text) {
    return branch_set_from(parse_json(json_text, "branch file"), "branch file");
}

BranchSet load_branch_file(const std::filesystem::path& path) {
    return parse_branch_set(read_file(path));
}

LatticeModel parse_lattice(std::string_view json_text) {
    const json j = parse_json(json_text, "lattice");
    const std::string what = "lattice";
    LatticeModel m;
    if (j.contains("name")) m.name = as_string(j.at("name"), "lattice.name");
    const int rank = as_int(field(j, "rank", what), "lattice.rank");
    if (rank < 1) throw InvalidLattice("rank must be at least 1");
    // Row-major flat list; nested rows are accepted as well.
    json gram = field(j, "gram", what);
    if (gram.is_array() && !gram.empty() && gram.front().is_array()) {
        json flat = json::array();
        for (const auto& row : gram) {
            if (!row.is_array()) throw ParseError("lattice.gram rows must all be arrays");
            for (const auto& v : row) flat.push_back(v);
        }
        gram = flat;
    }
    const DivisorClass flat = int_vector(gram, "lattice.gram");
    if (flat.size() != static_cast<std::size_t>(rank) * rank) {
        throw InvalidLattice("gram must list rank^2 = " + std::to_string(rank * rank) + " entries row by row");
    }
    for (int i = 0; i < rank; ++i) m.gram.emplace_back(flat.begin() + i * rank, flat.begin() + (i + 1) * rank);
    m.ample_witness = int_vector(field(j, "ample_witness", what), "lattice.ample_witness");
    const json& basis = field(j, "ortho_basis", what);
    if (!basis.is_array()) throw ParseError("lattice.ortho_basis must be an array of vectors");
    for (const auto& v : basis) {
        if (!v.is_array()) throw ParseError("lattice.ortho_basis entries must be arrays");
        RationalVector row;
        for (const auto& x : v) {
            row.push_back(x.is_number_integer() ? Rational(x.get<std::int64_t>())
                                                : parse_rational(as_string(x, "lattice.ortho_basis entry")));
        }
        m.ortho_basis.push_back(std::move(row));
    }
    m.ample_tests = int_vector(field(j, "ample_tests", what), "lattice.ample_tests");
    if (j.contains("nef_classes")) {
        for (const auto& v : j.at("nef_classes")) m.nef_classes.push_back(int_vector(v, "lattice.nef_classes entry"));
    }
    if (j.contains("denominator")) m.denominator = as_i64(j.at("denominator"), "lattice.denominator");
    m.validate();
    return m;
}

LatticeModel load_lattice(const std::filesystem::path& path) { return parse_lattice(read_file(path)); }

std::string lattice_to_json(const LatticeModel& m) {
    // Hand-formatted so that each Gram row and each vector sits on one line.
    auto inline_list = [](const auto& values, auto render) {
        std::string s = "[";
        for (std::size_t i = 0; i < values.size(); ++i) s += (i ? ", " : "") + render(values[i]);
        return s + "]";
    };
    auto num = [](std::int64_t v) { return std::to_string(v); };
    auto rat = [](const Rational& v) { return json(stabctab::to_string(v)).dump(); };
    auto block = [](const std::vector<std::string>& lines) {
        std::string s = "[\n";
        for (std::size_t i = 0; i < lines.size(); ++i) s += "    " + lines[i] + (i + 1 < lines.size() ? ",\n" : "\n");
        return s + "  ]";
    };
    std::vector<std::string> basis, nef;
    std::string gram = "[";
    for (std::size_t i = 0; i < m.gram.size(); ++i) {
        gram += "\n   ";
        for (auto v : m.gram[i]) gram += " " + num(v) + ",";
    }
    gram.back() = '\n';
    gram += "  ]";
    for (const auto& v : m.ortho_basis) basis.push_back(inline_list(v, rat));
    for (const auto& v : m.nef_classes) nef.push_back(inline_list(v, num));

    std::string s = "{\n";
    s += "  \"name\": " + json(m.name).dump() + ",\n";
    s += "  \"rank\": " + std::to_string(m.rank()) + ",\n";
    s += "  \"gram\": " + gram + ",\n";
    s += "  \"ample_witness\": " + inline_list(m.ample_witness, num) + ",\n";
    s += "  \"ortho_basis\": " + block(basis) + ",\n";
    s += "  \"ample_tests\": " + inline_list(m.ample_tests, num);
    if (!m.nef_classes.empty()) s += ",\n  \"nef_classes\": " + block(nef);
    if (m.denominator) s += ",\n  \"denominator\": " + std::to_string(*m.denominator);
    return s + "\n}\n";
}

DivisorClass parse_divisor_class(std::string_view text) {
    DivisorClass out;
    std::size_t pos = 0;
    while (true) {
        const auto comma = text.find(',', pos);
        auto piece = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
        while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
        std::int64_t v = 0;
        const auto* first = piece.data();
        if (!piece.empty() && piece.front() == '+') ++first;
        const auto [ptr, ec] = std::from_chars(first, piece.data() + piece.size(), v);
        if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size()) {
            throw ParseError("class coordinates must be comma-separated integers, got \"" + std::string(text) + "\"");
        }
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string to_string(const DivisorClass& c) {
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s;
}

}  // namespace stabctab::io
