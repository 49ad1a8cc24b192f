#include "lle/point_cloud.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "lle/errors.hpp"

namespace lle {

double diameter(const PointCloud& cloud) {
    const Eigen::Index n = cloud.size();
    double best = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            double d2 = (cloud.points.col(i) - cloud.points.col(j)).squaredNorm();
            if (d2 > best) best = d2;
        }
    }
    return std::sqrt(best);
}

namespace {

void append_double(std::string& out, double v) {
    char buf[40];
    int len = std::snprintf(buf, sizeof(buf), "%.17g", v);
    out.append(buf, static_cast<size_t>(len));
}

double parse_double(std::string_view field, const std::string& path, size_t line_no) {
    double v = 0.0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || ptr != end) {
        throw ConfigError(path + ":" + std::to_string(line_no) +
                          ": parse error in field '" + std::string(field) + "'");
    }
    return v;
}

std::vector<std::string_view> split_csv(std::string_view line) {
    std::vector<std::string_view> fields;
    size_t start = 0;
    while (true) {
        size_t pos = line.find(',', start);
        if (pos == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

}  // namespace

void save_csv(const PointCloud& cloud, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open for writing: " + path);

    const Eigen::Index d = cloud.dim();
    const Eigen::Index n = cloud.size();
    std::string buf;
    for (Eigen::Index c = 0; c < d; ++c) {
        if (c) buf += ',';
        buf += 'x';
        buf += std::to_string(c + 1);
    }
    if (cloud.params) buf += ",s,h";
    buf += '\n';

    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index c = 0; c < d; ++c) {
            if (c) buf += ',';
            append_double(buf, cloud.points(c, i));
        }
        if (cloud.params) {
            buf += ',';
            append_double(buf, (*cloud.params)(i, 0));
            buf += ',';
            append_double(buf, (*cloud.params)(i, 1));
        }
        buf += '\n';
    }
    out << buf;
    if (!out) throw ConfigError("write failed: " + path);
}

PointCloud load_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open: " + path);

    std::string line;
    if (!std::getline(in, line)) throw ConfigError(path + ": no rows");
    if (!line.empty() && line.back() == '\r') line.pop_back();

    auto header = split_csv(line);
    bool has_params = header.size() >= 3 && header[header.size() - 2] == "s" &&
                      header.back() == "h";
    const size_t d = header.size() - (has_params ? 2 : 0);
    if (d == 0) throw ConfigError(path + ":1: empty header");

    std::vector<double> coords;
    std::vector<double> params;
    size_t n = 0;
    size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split_csv(line);
        if (fields.size() != header.size()) {
            throw ConfigError(path + ":" + std::to_string(line_no) + ": expected " +
                              std::to_string(header.size()) + " fields, got " +
                              std::to_string(fields.size()));
        }
        for (size_t c = 0; c < d; ++c) coords.push_back(parse_double(fields[c], path, line_no));
        if (has_params) {
            params.push_back(parse_double(fields[d], path, line_no));
            params.push_back(parse_double(fields[d + 1], path, line_no));
        }
        ++n;
    }
    if (n == 0) throw ConfigError(path + ": no rows");

    PointCloud cloud;
    cloud.points.resize(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t c = 0; c < d; ++c)
            cloud.points(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(i)) =
                coords[i * d + c];
    if (has_params) {
        Eigen::MatrixXd p(static_cast<Eigen::Index>(n), 2);
        for (size_t i = 0; i < n; ++i) {
            p(static_cast<Eigen::Index>(i), 0) = params[2 * i];
            p(static_cast<Eigen::Index>(i), 1) = params[2 * i + 1];
        }
        cloud.params = std::move(p);
    }
    return cloud;
}

}  // namespace lle
