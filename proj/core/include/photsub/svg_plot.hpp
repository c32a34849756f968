#ifndef PHOTSUB_SVG_PLOT_HPP
#define PHOTSUB_SVG_PLOT_HPP

#include <Eigen/Core>
#include <string>
#include <vector>

namespace photsub::svg {

// Dependency-free SVG emitters for quick looks at sweep output. CSV is
// the canonical format; these exist for the --plot flag only.

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  std::string color;  // empty = pick from palette
};

std::string line_chart(const std::vector<Series>& series, const std::string& x_label,
                       const std::string& y_label, const std::string& title,
                       int width = 760, int height = 520);

// values(i, j): i indexes x (columns of the image), j indexes y.
std::string heatmap(const Eigen::MatrixXd& values, const std::vector<double>& x_axis,
                    const std::vector<double>& y_axis, const std::string& x_label,
                    const std::string& y_label, const std::string& title,
                    int width = 760, int height = 560);

void write_file(const std::string& path, const std::string& svg);

}  // namespace photsub::svg

#endif
