#include "test_support.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>

namespace veinseg::testing {

namespace {

int border_index(int i, int n, BorderMode mode) {
  if (i >= 0 && i < n) return i;
  if (mode == BorderMode::kZero) return -1;
  if (mode == BorderMode::kReplicate) return i < 0 ? 0 : n - 1;
  // Mirror without repeating the edge sample, one bounce at a time.
  while (i < 0 || i >= n) {
    if (n == 1) return 0;
    if (i < 0) i = -i;
    if (i >= n) i = 2 * (n - 1) - i;
  }
  return i;
}

void draw_segment(Phantom& p, int x0, int y0, int x1, int y1) {
  const int w = p.image.width();
  const int h = p.image.height();
  const int dx = std::abs(x1 - x0);
  const int dy = -std::abs(y1 - y0);
  const int sx = x0 < x1 ? 1 : -1;
  const int sy = y0 < y1 ? 1 : -1;
  int err = dx + dy;
  for (;;) {
    if (x0 >= 0 && x0 < w && y0 >= 0 && y0 < h) {
      p.vein_mask[static_cast<std::size_t>(y0) * w + x0] = 1;
    }
    if (x0 == x1 && y0 == y1) break;
    const int e2 = 2 * err;
    if (e2 >= dy) { err += dy; x0 += sx; }
    if (e2 <= dx) { err += dx; y0 += sy; }
  }
}

}  // namespace

Image random_image(std::mt19937_64& rng, int width, int height) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> d(static_cast<std::size_t>(width) * height);
  for (double& v : d) v = u(rng);
  return Image(width, height, std::move(d));
}

ResponseImage random_response(std::mt19937_64& rng, int width, int height, double lo,
                              double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> d(static_cast<std::size_t>(width) * height);
  for (double& v : d) v = u(rng);
  return ResponseImage(width, height, std::move(d));
}

Kernel random_kernel(std::mt19937_64& rng, int half_width, int half_height) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> w(static_cast<std::size_t>(2 * half_width + 1) * (2 * half_height + 1));
  for (double& v : w) v = u(rng);
  return Kernel(half_width, half_height, std::move(w));
}

StructuringElement random_se(std::mt19937_64& rng, bool force_origin) {
  std::bernoulli_distribution keep(0.4);
  std::vector<Offset> offsets;
  for (int dy = -2; dy <= 2; ++dy) {
    for (int dx = -2; dx <= 2; ++dx) {
      if (keep(rng)) offsets.push_back({dx, dy});
    }
  }
  if (force_origin || offsets.empty()) offsets.push_back({0, 0});
  return StructuringElement(std::move(offsets));
}

ResponseImage naive_correlate(const ResponseImage& img, const Kernel& k, BorderMode border) {
  ResponseImage out(img.width(), img.height(), 0.0);
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      double acc = 0.0;
      for (int dy = -k.half_height(); dy <= k.half_height(); ++dy) {
        for (int dx = -k.half_width(); dx <= k.half_width(); ++dx) {
          const int sx = border_index(x + dx, img.width(), border);
          const int sy = border_index(y + dy, img.height(), border);
          if (sx < 0 || sy < 0) continue;
          acc += k.at(dx, dy) * img(sx, sy);
        }
      }
      out(x, y) = acc;
    }
  }
  return out;
}

ResponseImage naive_erode(const ResponseImage& img, const StructuringElement& se) {
  ResponseImage out = img;
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      bool any = false;
      double best = 0.0;
      for (const Offset o : se.offsets()) {
        const int sx = x + o.dx;
        const int sy = y + o.dy;
        if (sx < 0 || sy < 0 || sx >= img.width() || sy >= img.height()) continue;
        if (!any || img(sx, sy) < best) best = img(sx, sy);
        any = true;
      }
      if (any) out(x, y) = best;
    }
  }
  return out;
}

ResponseImage naive_dilate(const ResponseImage& img, const StructuringElement& se) {
  ResponseImage out = img;
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      bool any = false;
      double best = 0.0;
      for (const Offset o : se.offsets()) {
        const int sx = x - o.dx;
        const int sy = y - o.dy;
        if (sx < 0 || sy < 0 || sx >= img.width() || sy >= img.height()) continue;
        if (!any || img(sx, sy) > best) best = img(sx, sy);
        any = true;
      }
      if (any) out(x, y) = best;
    }
  }
  return out;
}

ResponseImage negated(const ResponseImage& img) {
  ResponseImage out = img;
  for (double& v : out.pixels()) v = -v;
  return out;
}

double max_abs(const ResponseImage& img) {
  double m = 0.0;
  for (double v : img.pixels()) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_difference(const ResponseImage& a, const ResponseImage& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::abs(a.pixels()[i] - b.pixels()[i]));
  }
  return m;
}

Phantom make_vein_phantom(int width, int height, std::uint64_t seed) {
  Phantom p{Image(width, height, 0.0),
            std::vector<std::uint8_t>(static_cast<std::size_t>(width) * height, 0)};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  // Midrib from the bottom edge towards the top with a slight lean.
  const int x_bottom = width / 2 - width / 16;
  const int x_top = width / 2 + width / 16;
  const int y_bottom = height - height / 12;
  const int y_top = height / 12;
  draw_segment(p, x_bottom, y_bottom, x_top, y_top);

  // Secondary veins leave the midrib alternately left and right, angled
  // towards the apex; each carries one tertiary branch.
  const int branches = 8;
  for (int i = 0; i < branches; ++i) {
    const double t = (i + 1.0) / (branches + 1.0);
    const int bx = static_cast<int>(std::lround(x_bottom + t * (x_top - x_bottom)));
    const int by = static_cast<int>(std::lround(y_bottom + t * (y_top - y_bottom)));
    const double side = (i % 2 == 0) ? -1.0 : 1.0;
    const double angle = (35.0 + 20.0 * unit(rng)) * 3.14159265358979323846 / 180.0;
    const double length = 0.3 * width * (0.7 + 0.3 * unit(rng));
    const int ex = static_cast<int>(std::lround(bx + side * length * std::cos(angle)));
    const int ey = static_cast<int>(std::lround(by - length * std::sin(angle)));
    draw_segment(p, bx, by, ex, ey);

    const double s = 0.4 + 0.3 * unit(rng);
    const int tx = static_cast<int>(std::lround(bx + s * (ex - bx)));
    const int ty = static_cast<int>(std::lround(by + s * (ey - by)));
    const double t_len = 0.35 * length;
    const int tex = static_cast<int>(std::lround(tx + side * t_len * 0.3));
    const int tey = static_cast<int>(std::lround(ty + t_len));
    draw_segment(p, tx, ty, tex, tey);
  }

  std::uniform_real_distribution<double> noise(-0.05, 0.05);
  auto px = p.image.pixels();
  for (std::size_t i = 0; i < px.size(); ++i) {
    px[i] = (p.vein_mask[i] ? 0.8 : 0.2) + noise(rng);
  }
  return p;
}

double roc_auc(std::span<const double> scores, const std::vector<std::uint8_t>& positive) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  double total_pos = 0.0;
  double total_neg = 0.0;
  for (auto m : positive) (m ? total_pos : total_neg) += 1.0;

  double tp = 0.0;
  double fp = 0.0;
  double area = 0.0;
  std::size_t i = 0;
  while (i < order.size()) {
    // Advance past every sample sharing this threshold, then add one trapezoid.
    const double threshold = scores[order[i]];
    double dtp = 0.0;
    double dfp = 0.0;
    while (i < order.size() && scores[order[i]] == threshold) {
      (positive[order[i]] ? dtp : dfp) += 1.0;
      ++i;
    }
    area += dfp * (tp + dtp / 2.0);
    tp += dtp;
    fp += dfp;
  }
  return area / (total_pos * total_neg);
}

}  // namespace veinseg::testing
