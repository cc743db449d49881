#include "spikernel/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace spikernel {

using nlohmann::json;

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw IoError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

void save_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << j.dump(2) << "\n";
}

json edges_to_json(const CellGenotype& g) {
    json edges = json::array();
    for (const auto& op : g.edge_ops) edges.push_back(op_to_tag(op));
    return edges;
}

CellGenotype edges_from_json(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != kCellEdges)
        throw IoError(path + ": \"edges\" must be an array of " +
                      std::to_string(kCellEdges) + " operation tags");
    CellGenotype g;
    for (int e = 0; e < kCellEdges; ++e)
        g.edge_ops[e] = op_from_tag(j[e].get<std::string>());
    return g;
}

// -inf round-trips as the literal string in CSV and as null in JSON.
std::string r_to_csv(double r) {
    if (std::isinf(r) && r < 0) return "-inf";
    std::ostringstream os;
    os.precision(17);
    os << r;
    return os.str();
}

double r_from_csv(const std::string& s) {
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    return std::stod(s);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

GenotypeFile read_genotype_json(const std::string& path) {
    json j = load_json(path);
    if (!j.contains("setting") || !j.contains("edges"))
        throw IoError(path + ": genotype JSON needs \"setting\" and \"edges\"");
    GenotypeFile g;
    g.setting = parse_setting(j["setting"].get<std::string>());
    g.genotype = edges_from_json(j["edges"], path);
    check_genotype_in_vocabulary(g.genotype, g.setting.set);
    return g;
}

void write_genotype_json(const std::string& path, const GenotypeFile& g) {
    json j;
    j["setting"] = format_setting(g.setting);
    j["edges"] = edges_to_json(g.genotype);
    save_json(path, j);
}

void write_best_json(const std::string& path, const BestFile& b) {
    json j;
    j["setting"] = format_setting(b.setting);
    j["edges"] = edges_to_json(b.genotype);
    j["r_value"] = b.degenerate ? json(nullptr) : json(b.r_value);
    j["degenerate"] = b.degenerate;
    j["params"] = b.params;
    j["bytes"] = b.bytes;
    j["seed"] = b.seed;
    j["batch_size"] = b.batch_size;
    j["score_mode"] = score_mode_name(b.mode);
    save_json(path, j);
}

BestFile read_best_json(const std::string& path) {
    json j = load_json(path);
    BestFile b;
    b.setting = parse_setting(j.at("setting").get<std::string>());
    b.genotype = edges_from_json(j.at("edges"), path);
    b.degenerate = j.at("degenerate").get<bool>();
    b.r_value = j.at("r_value").is_null()
                    ? -std::numeric_limits<double>::infinity()
                    : j.at("r_value").get<double>();
    b.params = j.at("params").get<int64_t>();
    b.bytes = j.at("bytes").get<int64_t>();
    b.seed = j.at("seed").get<uint64_t>();
    b.batch_size = j.at("batch_size").get<int>();
    b.mode = score_mode_from_name(j.at("score_mode").get<std::string>());
    return b;
}

void write_history_csv(const std::string& path, const SearchHistory& h) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << "iteration,genotype_string,r_value,degenerate,params,elapsed_ms\n";
    for (const auto& it : h.iterations) {
        out << it.index << ',' << format_genotype(it.genotype) << ','
            << r_to_csv(it.r_value) << ',' << (it.degenerate ? 1 : 0) << ','
            << it.params << ',' << it.elapsed_ms << '\n';
    }
}

SearchHistory read_history_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::string line;
    if (!std::getline(in, line))
        throw IoError(path + ": empty history file");
    if (split_csv_line(line) !=
        std::vector<std::string>{"iteration", "genotype_string", "r_value",
                                 "degenerate", "params", "elapsed_ms"})
        throw IoError(path + ": unexpected history header '" + line + "'");

    SearchHistory h;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto f = split_csv_line(line);
        if (f.size() != 6)
            throw IoError(path + ": bad history row '" + line + "'");
        IterationResult it;
        it.index = std::stoll(f[0]);
        it.genotype = parse_genotype(f[1]);
        it.r_value = r_from_csv(f[2]);
        it.degenerate = f[3] == "1" || f[3] == "true";
        it.params = std::stoll(f[4]);
        it.elapsed_ms = std::stod(f[5]);
        h.total_elapsed_ms += it.elapsed_ms;
        h.iterations.push_back(std::move(it));
    }
    h.evaluations = static_cast<int64_t>(h.iterations.size());
    return h;
}

std::vector<CandidateRecord> read_records_json(const std::string& path) {
    json j = load_json(path);
    if (!j.is_array()) throw IoError(path + ": records file must be a JSON array");
    std::vector<CandidateRecord> out;
    for (const auto& r : j) {
        CandidateRecord rec;
        rec.id = r.at("id").get<std::string>();
        rec.setting = r.at("setting").get<std::string>();
        parse_setting(rec.setting);  // validate the label
        rec.genotype = edges_from_json(r.at("edges"), path);
        if (r.contains("r_value") && !r["r_value"].is_null())
            rec.r_value = r["r_value"].get<double>();
        if (r.contains("degenerate")) rec.degenerate = r["degenerate"].get<bool>();
        rec.params = r.at("params").get<int64_t>();
        if (r.contains("accuracy") && !r["accuracy"].is_null())
            rec.accuracy = r["accuracy"].get<double>();
        out.push_back(std::move(rec));
    }
    return out;
}

void write_records_json(const std::string& path,
                        const std::vector<CandidateRecord>& records) {
    json arr = json::array();
    for (const auto& r : records) {
        json j;
        j["id"] = r.id;
        j["setting"] = r.setting;
        j["edges"] = edges_to_json(r.genotype);
        j["r_value"] = std::isfinite(r.r_value) ? json(r.r_value) : json(nullptr);
        j["degenerate"] = r.degenerate;
        j["params"] = r.params;
        j["accuracy"] = r.accuracy ? json(*r.accuracy) : json(nullptr);
        arr.push_back(std::move(j));
    }
    save_json(path, arr);
}

void write_score_dump(const std::string& path, const ScoreReport& report) {
    json j;
    j["r_value"] = report.degenerate ? json(nullptr) : json(report.r_value);
    j["degenerate"] = report.degenerate;
    j["mode"] = score_mode_name(report.mode);
    j["batch"] = report.batch;
    j["layer_n_a"] = report.layer_n_a;
    j["layers"] = report.layer_names;
    save_json(path, j);
}

void write_tradeoff_csv(const std::string& path,
                        const std::vector<CandidateRecord>& records) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << "setting,params,accuracy,r_value\n";
    for (const auto& r : records) {
        out << r.setting << ',' << r.params << ',';
        if (r.accuracy) out << *r.accuracy;
        out << ',' << r_to_csv(r.r_value) << '\n';
    }
}

std::vector<SpeedupRow> speedup_rows(const std::vector<std::string>& labels,
                                     const std::vector<SearchHistory>& histories) {
    if (labels.size() != histories.size())
        throw ValidationError("labels/histories size mismatch");
    if (histories.empty()) return {};
    size_t base = 0;
    for (size_t i = 1; i < histories.size(); ++i)
        if (histories[i].evaluations > histories[base].evaluations) base = i;

    std::vector<SpeedupRow> rows;
    for (size_t i = 0; i < histories.size(); ++i) {
        SpeedupRow row;
        row.label = labels[i];
        row.iterations = histories[i].evaluations;
        row.total_elapsed_ms = histories[i].total_elapsed_ms;
        row.eval_ratio = static_cast<double>(histories[base].evaluations) /
                         static_cast<double>(histories[i].evaluations);
        row.wall_ratio = histories[base].total_elapsed_ms / histories[i].total_elapsed_ms;
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_speedup_csv(const std::string& path, const std::vector<SpeedupRow>& rows) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << "label,iterations,total_elapsed_ms,eval_ratio,wall_ratio\n";
    for (const auto& r : rows)
        out << r.label << ',' << r.iterations << ',' << r.total_elapsed_ms << ','
            << r.eval_ratio << ',' << r.wall_ratio << '\n';
}

}  // namespace spikernel
