#include "hankel/report.hpp"

#include <fstream>
#include <sstream>

#include "hankel/version.hpp"

namespace hankel {

namespace {

Json values_json(const std::vector<Int>& values) {
    Json out = Json::array();
    for (std::size_t n = 0; n < values.size(); ++n)
        out.push_back(Json{{"n", n}, {"h", values[n].get_str()}});
    return out;
}

std::vector<Int> values_from_json(const Json& j) {
    std::vector<Int> out(j.size());
    for (const auto& item : j) {
        const std::size_t n = item.at("n").get<std::size_t>();
        if (n >= out.size()) throw std::runtime_error("determinant table is not dense in n");
        out[n] = Int(item.at("h").get<std::string>());
    }
    return out;
}

}  // namespace

Json to_json(const DeterminantTable& t) {
    Json j;
    j["tool_version"] = t.tool_version;
    j["r"] = t.r;
    j["method"] = t.method;
    j["precision"] = t.precision;
    j["values"] = values_json(t.values);
    return j;
}

DeterminantTable determinant_table_from_json(const Json& j) {
    DeterminantTable t;
    t.tool_version = j.at("tool_version").get<std::string>();
    t.r = j.at("r").get<unsigned>();
    t.method = j.at("method").get<std::string>();
    t.precision = j.at("precision").get<std::size_t>();
    t.values = values_from_json(j.at("values"));
    return t;
}

Json to_json(const ClosedForm& f) {
    Json j;
    j["q"] = f.q;
    j["j"] = f.j;
    j["sign"] = sign_mode_str(f.sign);
    Json poly = Json::array();
    for (const Rat& c : f.poly.coeffs()) poly.push_back(c.get_str());
    j["poly"] = poly;
    return j;
}

Json to_json(const TargetReport& rep) {
    Json j;
    j["target"] = rep.target;
    j["status"] = verify_status_str(rep.status);
    Json ces = Json::array();
    for (const auto& ce : rep.counterexamples)
        ces.push_back(Json{{"r", ce.r}, {"n", ce.n}, {"expected", ce.expected}, {"actual", ce.actual}});
    j["counterexamples"] = ces;
    Json consts = Json::object();
    for (const auto& [k, v] : rep.constants) consts[k] = v;
    j["constants"] = consts;
    Json notes = Json::array();
    for (const auto& note : rep.notes) notes.push_back(note);
    j["notes"] = notes;
    return j;
}

Json to_json(const RunReport& rep) {
    Json j;
    j["tool_version"] = kToolVersion;
    j["r"] = rep.r;
    j["values"] = values_json(rep.values);
    if (rep.period)
        j["period"] = *rep.period;
    else
        j["period"] = nullptr;
    Json forms = Json::array();
    for (const auto& f : rep.closed_forms) forms.push_back(to_json(f));
    j["closed_forms"] = forms;
    Json ver = Json::array();
    for (const auto& t : rep.verification) ver.push_back(to_json(t));
    j["verification"] = ver;
    return j;
}

std::string render_csv(const DeterminantTable& t) {
    std::ostringstream os;
    os << "n,h\n";
    for (std::size_t n = 0; n < t.values.size(); ++n) os << n << "," << t.values[n].get_str() << "\n";
    return os.str();
}

std::string render_markdown(const DeterminantTable& t) {
    std::ostringstream os;
    os << "| n | H_n(M^" << t.r << ") |\n|---:|---:|\n";
    for (std::size_t n = 0; n < t.values.size(); ++n)
        os << "| " << n << " | " << t.values[n].get_str() << " |\n";
    return os.str();
}

std::string render_markdown(const RunReport& rep) {
    std::ostringstream os;
    os << "# r = " << rep.r << "\n\n";
    if (rep.period) os << "Detected period: " << *rep.period << "\n\n";
    if (!rep.closed_forms.empty()) {
        os << "| class | sign | polynomial in n |\n|---|---|---|\n";
        for (const auto& f : rep.closed_forms)
            os << "| " << f.q << "n+" << f.j << " | " << sign_mode_str(f.sign) << " | "
               << f.poly.str("n") << " |\n";
        os << "\n";
    }
    if (!rep.verification.empty()) {
        os << "| target | status | detail |\n|---|---|---|\n";
        for (const auto& t : rep.verification) {
            os << "| " << t.target << " | " << verify_status_str(t.status) << " | ";
            bool first = true;
            for (const auto& [k, v] : t.constants) {
                if (!first) os << "; ";
                os << k << " = " << v;
                first = false;
            }
            os << " |\n";
        }
        os << "\n";
    }
    std::size_t shown = std::min<std::size_t>(rep.values.size(), 24);
    os << "First " << shown << " determinants: ";
    for (std::size_t n = 0; n < shown; ++n) {
        if (n) os << ", ";
        os << rep.values[n].get_str();
    }
    os << "\n";
    return os.str();
}

TableCache::TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
}

std::filesystem::path TableCache::path_for(unsigned r, const std::string& method) const {
    return dir_ / ("det-r" + std::to_string(r) + "-" + method + "-v" + kToolVersion + "-" +
                   kPrecisionPolicy + ".json");
}

std::optional<DeterminantTable> TableCache::load(unsigned r, const std::string& method,
                                                 std::size_t min_orders) const {
    const auto path = path_for(r, method);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    try {
        Json j = Json::parse(in);
        DeterminantTable t = determinant_table_from_json(j);
        if (t.tool_version != kToolVersion || t.r != r || t.method != method) return std::nullopt;
        if (t.values.size() < min_orders) return std::nullopt;
        return t;
    } catch (const std::exception&) {
        return std::nullopt;  // unreadable cache entries are recomputed
    }
}

void TableCache::store(const DeterminantTable& t) const {
    write_text_file(path_for(t.r, t.method), to_json(t).dump(2) + "\n");
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << text;
}

}  // namespace hankel
