#include "hcncov/io.hpp"

#include <cstdio>
#include <fstream>

#include "hcncov/errors.hpp"

namespace hcncov::io {

namespace {

std::ofstream open_csv(const std::string& path)
{
   std::ofstream out(path, std::ios::binary);  // binary: no platform newline games
   if(!out) throw IoError("cannot open for writing: " + path);
   return out;
}

void finish(std::ofstream& out, const std::string& path)
{
   out.flush();
   if(!out) throw IoError("write failed: " + path);
}

} // namespace

std::string format_double(double x)
{
   char buf[40];
   std::snprintf(buf, sizeof buf, "%.12g", x);
   return buf;
}

void write_points_csv(const std::string& path, const pp::PointSet& set)
{
   auto out = open_csv(path);
   out << "x_m,y_m\n";
   for(const auto& q : set.points)
      out << format_double(q.x) << ',' << format_double(q.y) << '\n';
   finish(out, path);
}

void write_distance_law_csv(const std::string& path, std::span<const double> z,
                            std::span<const double> pdf, std::span<const double> survival)
{
   if(z.size() != pdf.size() || z.size() != survival.size())
      throw ArgumentOutOfRange("write_distance_law_csv: column lengths differ");
   auto out = open_csv(path);
   out << "z_m,pdf_per_m,survival\n";
   for(std::size_t i = 0; i < z.size(); ++i)
      out << format_double(z[i]) << ',' << format_double(pdf[i]) << ','
          << format_double(survival[i]) << '\n';
   finish(out, path);
}

void write_distance_cdf_csv(const std::string& path, const DistanceCdf& cdf)
{
   if(cdf.r.size() != cdf.cdf.size())
      throw ArgumentOutOfRange("write_distance_cdf_csv: column lengths differ");
   auto out = open_csv(path);
   out << "r_m,cdf\n";
   for(std::size_t i = 0; i < cdf.r.size(); ++i)
      out << format_double(cdf.r[i]) << ',' << format_double(cdf.cdf[i]) << '\n';
   finish(out, path);
}

void write_coverage_csv(const std::string& path, std::span<const CoverageCurve> curves)
{
   for(const auto& c : curves) {
      if(c.values.size() != c.gammas_db.size())
         throw ArgumentOutOfRange("write_coverage_csv: curve column lengths differ");
      if(!c.ci_halfwidth.empty() && c.ci_halfwidth.size() != c.gammas_db.size())
         throw ArgumentOutOfRange("write_coverage_csv: ci column length differs");
   }
   auto out = open_csv(path);
   out << "gamma_dB,value,method,ci_halfwidth\n";
   for(const auto& c : curves) {
      const auto label = method_label(c.method);
      for(std::size_t i = 0; i < c.gammas_db.size(); ++i) {
         out << format_double(c.gammas_db[i]) << ',' << format_double(c.values[i]) << ','
             << label << ',';
         if(!c.ci_halfwidth.empty()) out << format_double(c.ci_halfwidth[i]);
         out << '\n';
      }
   }
   finish(out, path);
}

} // namespace hcncov::io
