#include "bwalk/io.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace bwalk::io {

namespace {

void put_real(std::ostream& out, double x) {
    out << std::setprecision(std::numeric_limits<double>::max_digits10) << x;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

uint64_t parse_u64(const std::string& text, const char* what) {
    try {
        size_t used = 0;
        const uint64_t v = std::stoull(text, &used);
        if (used != text.size()) throw std::invalid_argument(what);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("malformed ") + what + ": '" + text + "'");
    }
}

double parse_real(const std::string& text, const char* what) {
    try {
        size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(what);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("malformed ") + what + ": '" + text + "'");
    }
}

} // namespace

void write_sample(std::ostream& out, const Sample& sample) {
    out << "N=" << sample.length() << "\n";
    for (size_t sid = 0; sid < sample.size(); ++sid) {
        out << sample.get(sid).to_string() << ",";
        put_real(out, sample.fitness(sid));
        out << "\n";
    }
}

Sample read_sample(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line.rfind("N=", 0) != 0) {
        throw std::invalid_argument("sample file must start with an N=<length> header");
    }
    const auto n = static_cast<size_t>(parse_u64(line.substr(2), "sample length"));
    Sample out(n, Origin::External);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto parts = split(line, ',');
        if (parts.size() != 2) throw std::invalid_argument("sample line needs <bits>,<fitness>");
        BitString s = BitString::from_string(parts[0]);
        if (s.size() != n) throw std::invalid_argument("sample string length differs from header");
        out.add(s, parse_real(parts[1], "fitness"));
    }
    return out;
}

void write_landscape(std::ostream& out, const NkLandscape& f, bool explicit_tables) {
    if (!explicit_tables && f.has_seed()) {
        out << "NK " << f.length() << " " << f.k() << " " << f.seed() << "\n";
        return;
    }
    out << "NKTABLES " << f.length() << " " << f.k() << "\n";
    for (size_t i = 0; i < f.length(); ++i) {
        out << "P " << i;
        for (uint32_t nb : f.neighbors()[i]) out << " " << nb;
        out << "\n";
        out << "T " << i;
        for (double v : f.tables()[i]) {
            out << " ";
            put_real(out, v);
        }
        out << "\n";
    }
}

NkLandscape read_landscape(std::istream& in) {
    std::string word;
    if (!(in >> word)) throw std::invalid_argument("empty landscape file");
    if (word == "NK") {
        uint64_t n = 0, k = 0, seed = 0;
        if (!(in >> n >> k >> seed)) {
            throw std::invalid_argument("NK header needs <n> <k> <seed>");
        }
        return nk_generate(n, k, seed);
    }
    if (word != "NKTABLES") throw std::invalid_argument("unknown landscape header: " + word);
    size_t n = 0, k = 0;
    if (!(in >> n >> k)) throw std::invalid_argument("NKTABLES header needs <n> <k>");
    std::vector<std::vector<uint32_t>> neighbors(n);
    std::vector<std::vector<double>> tables(n);
    for (size_t row = 0; row < 2 * n; ++row) {
        std::string tag;
        size_t i = 0;
        if (!(in >> tag >> i) || i >= n) {
            throw std::invalid_argument("landscape table rows must be 'P <i> ...' or 'T <i> ...'");
        }
        if (tag == "P") {
            neighbors[i].resize(k);
            for (auto& nb : neighbors[i]) {
                if (!(in >> nb)) throw std::invalid_argument("truncated neighbor row");
            }
        } else if (tag == "T") {
            tables[i].resize(size_t{1} << (k + 1));
            for (auto& v : tables[i]) {
                if (!(in >> v)) throw std::invalid_argument("truncated table row");
            }
        } else {
            throw std::invalid_argument("unknown landscape row tag: " + tag);
        }
    }
    return NkLandscape(n, k, std::move(neighbors), std::move(tables));
}

void write_vsets(std::ostream& out, const VSets& v) {
    for (size_t sid = 0; sid < v.size(); ++sid) {
        out << sid << ",";
        if (v.members[sid].empty()) {
            out << ",";
        } else {
            out << v.min_hd[sid] << ",";
            for (size_t i = 0; i < v.members[sid].size(); ++i) {
                if (i) out << ";";
                out << v.members[sid][i];
            }
        }
        out << "\n";
    }
}

VSets read_vsets(std::istream& in) {
    struct Row {
        size_t sid;
        uint32_t hd;
        std::vector<uint32_t> members;
    };
    std::vector<Row> rows;
    size_t max_sid = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto parts = split(line, ',');
        if (parts.size() != 3) {
            throw std::invalid_argument("V-set line needs sid,min_hd,members");
        }
        Row row;
        row.sid = static_cast<size_t>(parse_u64(parts[0], "sid"));
        max_sid = std::max(max_sid, row.sid);
        row.hd = 0;
        if (parts[1].empty() != parts[2].empty()) {
            throw std::invalid_argument("fittest rows must leave both fields empty");
        }
        if (!parts[1].empty()) {
            row.hd = static_cast<uint32_t>(parse_u64(parts[1], "min_hd"));
            for (const auto& m : split(parts[2], ';')) {
                row.members.push_back(static_cast<uint32_t>(parse_u64(m, "member sid")));
            }
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("empty V-set file");
    VSets v(max_sid + 1);
    for (auto& row : rows) {
        v.min_hd[row.sid] = row.hd;
        v.members[row.sid] = std::move(row.members);
    }
    v.normalize();
    return v;
}

void write_walks(std::ostream& out, const std::vector<walks::Walk>& ws) {
    for (const auto& w : ws) {
        out << w.nodes.front() << ":";
        for (size_t i = 0; i < w.nodes.size(); ++i) {
            if (i) out << ">";
            out << w.nodes[i];
        }
        out << ";steps=";
        for (size_t i = 0; i < w.steps.size(); ++i) {
            if (i) out << ",";
            out << w.steps[i];
        }
        out << "\n";
    }
}

std::vector<walks::Walk> read_walks(std::istream& in) {
    std::vector<walks::Walk> ws;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto colon = line.find(':');
        const auto semi = line.find(";steps=");
        if (colon == std::string::npos || semi == std::string::npos || semi < colon) {
            throw std::invalid_argument("walk line needs start:chain;steps=sizes");
        }
        walks::Walk w;
        for (const auto& node : split(line.substr(colon + 1, semi - colon - 1), '>')) {
            w.nodes.push_back(static_cast<uint32_t>(parse_u64(node, "walk node")));
        }
        const auto steps_text = line.substr(semi + 7);
        if (!steps_text.empty()) {
            for (const auto& s : split(steps_text, ',')) {
                w.steps.push_back(static_cast<uint32_t>(parse_u64(s, "step size")));
            }
        }
        const auto start = parse_u64(line.substr(0, colon), "walk start");
        if (w.nodes.empty() || w.nodes.front() != start ||
            w.steps.size() + 1 != w.nodes.size()) {
            throw std::invalid_argument("inconsistent walk line: " + line);
        }
        ws.push_back(std::move(w));
    }
    return ws;
}

void write_sids(std::ostream& out, const std::vector<uint32_t>& sids) {
    for (uint32_t s : sids) out << s << "\n";
}

std::vector<uint32_t> read_sids(std::istream& in) {
    std::vector<uint32_t> sids;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        sids.push_back(static_cast<uint32_t>(parse_u64(line, "sid")));
    }
    return sids;
}

void write_wl_meta(std::ostream& out, const sampler::WlRun& run, size_t max_sample) {
    out << "evaluations=" << run.evaluations << "\n";
    out << "final_ln_f=";
    put_real(out, run.final_ln_f);
    out << "\n";
    out << "seed=" << run.seed << "\n";
    out << "max_sample=" << max_sample << "\n";
}

void write_stats_csv(std::ostream& out, const std::vector<StatsRow>& rows) {
    out << "problem,sample,statistic,mean,ci95\n";
    for (const auto& r : rows) {
        out << r.problem << "," << r.sample_kind << "," << r.statistic << ",";
        out << std::setprecision(10) << r.mean << "," << r.ci95 << "\n";
    }
}

std::string slurp_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::invalid_argument("cannot write " + tmp);
        out << content;
        if (!out.good()) throw std::invalid_argument("short write to " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        throw std::invalid_argument("cannot move " + tmp + " into place");
    }
}

} // namespace bwalk::io
