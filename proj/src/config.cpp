#include "weyl/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "weyl/errors.hpp"
#include "weyl/report.hpp"

namespace weyl {

namespace {

std::string trimmed(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

double to_double(const std::string& s, const char* key) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw InvalidInput(std::string("bad numeric value for '") + key + "': " + s);
    }
}

}  // namespace

BoundaryCondition parse_bc(const std::string& text) {
    const std::string t = lowercase(trimmed(text));
    if (t == "dirichlet") return BoundaryCondition::dirichlet();
    if (t == "neumann") return BoundaryCondition::neumann();
    if (t.rfind("robin:", 0) == 0)
        return BoundaryCondition::robin(to_double(t.substr(6), "robin sigma"));
    throw InvalidInput("unknown boundary condition '" + text +
                       "' (expected dirichlet|neumann|robin:SIGMA)");
}

std::string format_bc(BoundaryCondition bc) {
    switch (bc.kind) {
        case BcKind::Dirichlet: return "dirichlet";
        case BcKind::Neumann: return "neumann";
        case BcKind::Robin: return "robin:" + format_g17(bc.sigma);
    }
    return "dirichlet";
}

DomainSpec parse_domain(const std::string& text) {
    const std::string t = lowercase(trimmed(text));
    const auto open = t.find('('), close = t.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw InvalidInput("domain must be rectangle(a,b) or disk(R)");
    const std::string head = trimmed(t.substr(0, open));
    const std::string args = t.substr(open + 1, close - open - 1);
    if (head == "disk") return make_disk(to_double(trimmed(args), "disk radius"));
    if (head == "rectangle") {
        const auto comma = args.find(',');
        if (comma == std::string::npos) throw InvalidInput("rectangle needs two sides");
        return make_rectangle(to_double(trimmed(args.substr(0, comma)), "rectangle a"),
                              to_double(trimmed(args.substr(comma + 1)), "rectangle b"));
    }
    throw InvalidInput("unknown domain '" + head + "'");
}

std::string format_domain(const DomainSpec& d) {
    if (d.shape == Shape::Disk) return "disk(" + format_g17(d.radius) + ")";
    return "rectangle(" + format_g17(d.a) + "," + format_g17(d.b) + ")";
}

ExperimentConfig parse_config(const std::string& text) {
    ExperimentConfig cfg;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trimmed(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw InvalidInput("config lines must be 'key = value', got: " + line);
        const std::string key = lowercase(trimmed(line.substr(0, eq)));
        const std::string value = trimmed(line.substr(eq + 1));

        if (key == "domain") cfg.domain = parse_domain(value);
        else if (key == "bc") cfg.bc = parse_bc(value);
        else if (key == "v") cfg.potential = parse_potential(value);
        else if (key == "h") cfg.h = to_double(value, "h");
        else if (key == "eps") cfg.eps = to_double(value, "eps");
        else if (key == "lambda_min") cfg.lambda_min = to_double(value, "lambda_min");
        else if (key == "lambda_max") cfg.lambda_max = to_double(value, "lambda_max");
        else if (key == "lambda_step") cfg.lambda_step = to_double(value, "lambda_step");
        else if (key == "t_min") cfg.t_min = to_double(value, "t_min");
        else if (key == "t_max") cfg.t_max = to_double(value, "t_max");
        else if (key == "t_count") cfg.t_count = static_cast<int>(to_double(value, "t_count"));
        else if (key == "seed") cfg.seed = static_cast<unsigned long>(to_double(value, "seed"));
        else if (key == "out") cfg.out_dir = value;
        else throw InvalidInput("unknown config key '" + key + "'");
    }
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open config file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string emit_config(const ExperimentConfig& cfg) {
    std::ostringstream out;
    out << "domain = " << format_domain(cfg.domain) << '\n';
    out << "bc = " << format_bc(cfg.bc) << '\n';
    out << "V = " << format_potential(cfg.potential) << '\n';
    out << "h = " << format_g17(cfg.h) << '\n';
    out << "eps = " << format_g17(cfg.eps) << '\n';
    out << "lambda_min = " << format_g17(cfg.lambda_min) << '\n';
    out << "lambda_max = " << format_g17(cfg.lambda_max) << '\n';
    out << "lambda_step = " << format_g17(cfg.lambda_step) << '\n';
    out << "t_min = " << format_g17(cfg.t_min) << '\n';
    out << "t_max = " << format_g17(cfg.t_max) << '\n';
    out << "t_count = " << cfg.t_count << '\n';
    out << "seed = " << cfg.seed << '\n';
    out << "out = " << cfg.out_dir << '\n';
    return out.str();
}

}  // namespace weyl
