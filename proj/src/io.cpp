#include "tdpoly/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tdpoly {
namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

// "key: value" lines; '#' starts a comment; keys must be unique.
std::map<std::string, std::string> parse_record(const std::string& text,
                                                const std::vector<std::string>& known_keys) {
    std::map<std::string, std::string> record;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError("line " + std::to_string(lineno) + ": expected 'key: value'");
        std::string key = trim(line.substr(0, colon));
        std::string value = trim(line.substr(colon + 1));
        if (std::find(known_keys.begin(), known_keys.end(), key) == known_keys.end())
            throw ParseError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        if (record.count(key))
            throw ParseError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
        if (value.empty())
            throw ParseError("line " + std::to_string(lineno) + ": empty value for '" + key + "'");
        record[key] = value;
    }
    return record;
}

const std::string& require_key(const std::map<std::string, std::string>& record,
                               const std::string& key) {
    auto it = record.find(key);
    if (it == record.end()) throw ParseError("missing key '" + key + "'");
    return it->second;
}

int parse_diameter(const std::string& value) {
    for (char c : value)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("bad diameter: " + value);
    int d = std::stoi(value);
    if (d > 64) throw ParseError("diameter " + value + " exceeds the desk-scale bound 64");
    return d;
}

}  // namespace

std::vector<FieldElement> parse_element_list(const Field& f, const std::string& text) {
    std::vector<FieldElement> out;
    for (const std::string& tok : split(text, ',')) out.push_back(FieldElement::parse(f, trim(tok)));
    return out;
}

std::string render_element_list(std::span<const FieldElement> values) {
    std::string out;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        out += values[i].to_string();
    }
    return out;
}

ParsedArray parse_array_text(const std::string& text) {
    static const std::vector<std::string> keys = {"field", "d",  "type", "beta", "theta",
                                                  "theta_star", "zeta", "phi",  "q",    "a",
                                                  "b",          "c",    "a*",   "b*",   "c*"};
    auto record = parse_record(text, keys);

    Field f = Field::parse(require_key(record, "field"));
    int d = parse_diameter(require_key(record, "d"));
    TDType declared = type_from_string(require_key(record, "type"));

    std::vector<FieldElement> theta = parse_element_list(f, require_key(record, "theta"));
    std::vector<FieldElement> theta_star = parse_element_list(f, require_key(record, "theta_star"));
    if (static_cast<int>(theta.size()) != d + 1 || static_cast<int>(theta_star.size()) != d + 1)
        throw DomainError("theta and theta_star must have length d+1");

    if (record.count("zeta") == record.count("phi"))
        throw DomainError("exactly one of zeta / phi must be present");
    std::vector<FieldElement> zeta;
    if (record.count("zeta")) {
        zeta = parse_element_list(f, record.at("zeta"));
        if (static_cast<int>(zeta.size()) != d + 1) throw DomainError("zeta must have length d+1");
    } else {
        std::vector<FieldElement> phi = parse_element_list(f, record.at("phi"));
        if (static_cast<int>(phi.size()) != d) throw DomainError("phi must have length d");
        zeta = zeta_from_phi(phi, f);
    }

    FieldElement beta = FieldElement::zero(f);
    if (record.count("beta")) {
        beta = FieldElement::parse(f, record.at("beta"));
    } else if (d >= 3) {
        beta = compute_base(theta, theta_star);
    } else {
        throw DomainError("beta is required for d <= 2");
    }

    std::optional<FieldElement> q;
    if (record.count("q")) q = FieldElement::parse(f, record.at("q"));

    ParameterArray pa(f, d, std::move(theta), std::move(theta_star), std::move(zeta), beta, q);
    if (pa.type() != declared)
        throw DomainError("declared type " + type_to_string(declared) +
                          " but the base classifies as " + type_to_string(pa.type()));

    std::optional<TypeData> td;
    static const std::vector<std::string> scalar_keys = {"a", "b", "c", "a*", "b*", "c*"};
    size_t present = 0;
    for (const auto& k : scalar_keys) present += record.count(k);
    if (present > 0) {
        if (present != scalar_keys.size())
            throw ParseError("type-data block must carry all of a, b, c, a*, b*, c*");
        td = TypeData{pa.type(),
                      q,
                      FieldElement::parse(f, record.at("a")),
                      FieldElement::parse(f, record.at("b")),
                      FieldElement::parse(f, record.at("c")),
                      FieldElement::parse(f, record.at("a*")),
                      FieldElement::parse(f, record.at("b*")),
                      FieldElement::parse(f, record.at("c*"))};
        for (bool starred : {false, true}) {
            std::vector<FieldElement> expect = eigenvalues_from(*td, d, starred);
            const std::vector<FieldElement>& got = starred ? pa.theta_star() : pa.theta();
            if (expect != got)
                throw DomainError("type-data block does not reproduce the eigenvalue sequences");
        }
    }
    return ParsedArray{std::move(pa), std::move(td)};
}

std::string render_array_text(const ParameterArray& pa, const std::optional<TypeData>& td) {
    std::string out;
    out += "field: " + pa.field().to_string() + "\n";
    out += "d: " + std::to_string(pa.d()) + "\n";
    out += "type: " + type_to_string(pa.type()) + "\n";
    out += "beta: " + pa.beta().to_string() + "\n";
    out += "theta: " + render_element_list(pa.theta()) + "\n";
    out += "theta_star: " + render_element_list(pa.theta_star()) + "\n";
    out += "zeta: " + render_element_list(pa.zeta()) + "\n";
    if (pa.q()) out += "q: " + pa.q()->to_string() + "\n";
    if (td) {
        out += "a: " + td->a.to_string() + "\n";
        out += "b: " + td->b.to_string() + "\n";
        out += "c: " + td->c.to_string() + "\n";
        out += "a*: " + td->a_star.to_string() + "\n";
        out += "b*: " + td->b_star.to_string() + "\n";
        out += "c*: " + td->c_star.to_string() + "\n";
    }
    return out;
}

LeonardFile parse_leonard_text(const std::string& text) {
    static const std::vector<std::string> keys = {"field", "d", "type", "q",  "a",  "b",
                                                  "c",     "a*", "b*",  "c*"};
    auto record = parse_record(text, keys);

    Field f = Field::parse(require_key(record, "field"));
    int d = parse_diameter(require_key(record, "d"));
    std::optional<TDType> type;
    if (record.count("type")) type = type_from_string(record.at("type"));
    std::optional<FieldElement> q;
    if (record.count("q")) q = FieldElement::parse(f, record.at("q"));

    auto scalar = [&](const char* key) { return FieldElement::parse(f, require_key(record, key)); };
    return LeonardFile{f,
                       d,
                       type,
                       q,
                       scalar("a"),
                       scalar("b"),
                       scalar("c"),
                       scalar("a*"),
                       scalar("b*"),
                       scalar("c*")};
}

MatrixFile parse_matrix_text(const std::string& text) {
    static const std::vector<std::string> keys = {"field", "d", "theta", "theta_star", "A", "A*"};
    auto record = parse_record(text, keys);

    Field f = Field::parse(require_key(record, "field"));
    int d = parse_diameter(require_key(record, "d"));
    std::vector<FieldElement> theta = parse_element_list(f, require_key(record, "theta"));
    std::vector<FieldElement> theta_star = parse_element_list(f, require_key(record, "theta_star"));
    if (static_cast<int>(theta.size()) != d + 1 || static_cast<int>(theta_star.size()) != d + 1)
        throw DomainError("theta and theta_star must have length d+1");

    auto parse_matrix = [&](const std::string& value) {
        std::vector<std::vector<FieldElement>> rows;
        for (const std::string& row : split(value, ';')) rows.push_back(parse_element_list(f, row));
        Matrix m(f, static_cast<int>(rows.size()), d + 1);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(rows[i].size()) != d + 1)
                throw DomainError("matrix rows must have length d+1");
            for (int j = 0; j <= d; ++j) m.at(static_cast<int>(i), j) = rows[i][static_cast<size_t>(j)];
        }
        if (m.rows() != d + 1) throw DomainError("matrices must be (d+1) x (d+1)");
        return m;
    };
    Matrix A = parse_matrix(require_key(record, "A"));
    Matrix A_star = parse_matrix(require_key(record, "A*"));
    return MatrixFile{f, d, std::move(theta), std::move(theta_star), std::move(A),
                      std::move(A_star)};
}

std::string render_matrix_text(const MatrixPair& mp, std::span<const FieldElement> theta,
                               std::span<const FieldElement> theta_star) {
    std::string out;
    out += "field: " + mp.A.field().to_string() + "\n";
    out += "d: " + std::to_string(mp.A.rows() - 1) + "\n";
    out += "theta: " + render_element_list(theta) + "\n";
    out += "theta_star: " + render_element_list(theta_star) + "\n";
    out += "A: " + mp.A.to_string() + "\n";
    out += "A*: " + mp.A_star.to_string() + "\n";
    return out;
}

}  // namespace tdpoly
