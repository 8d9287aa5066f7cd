#include "dhwt/codec.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>

namespace dhwt {

std::vector<double> schedule_thresholds(const ThresholdSchedule& schedule, int levels,
                                        int loop_index) {
    if (schedule.loops < 1) throw std::invalid_argument("schedule: loops must be >= 1");
    if (loop_index < 1 || loop_index > schedule.loops)
        throw std::invalid_argument("schedule: loop index out of range");
    if (!(schedule.loop_ratio > 0.0 && schedule.loop_ratio < 1.0))
        throw std::invalid_argument("schedule: loop ratio must be in (0,1)");
    const double scale = std::pow(schedule.loop_ratio, loop_index - 1);
    std::vector<double> out(levels);
    for (int l = 1; l <= levels; ++l) {
        double base = schedule.base_threshold;
        if (schedule.mode == ThresholdSchedule::Mode::per_level) {
            if (static_cast<int>(schedule.per_level.size()) != levels)
                throw std::invalid_argument("schedule: per-level list size mismatch");
            base = schedule.per_level[l - 1];
        }
        if (!(base >= 0.0)) throw std::invalid_argument("schedule: negative threshold");
        out[l - 1] = base * scale;
    }
    return out;
}

namespace {

void hard_threshold(MatD& m, double t) {
    for (double& c : m.v) {
        if (std::abs(c) <= t) c = 0.0;
    }
}

} // namespace

SubbandPyramid threshold_pyramid(const SubbandPyramid& p, const ThresholdSchedule& schedule,
                                 int loop_index) {
    const std::vector<double> ts = schedule_thresholds(schedule, p.levels, loop_index);
    SubbandPyramid out = p;
    for (ChannelPyramid& ch : out.channels) {
        for (int l = 1; l <= p.levels; ++l) {
            DetailBands& db = ch.details[l - 1];
            hard_threshold(db.dh, ts[l - 1]);
            hard_threshold(db.dv, ts[l - 1]);
            hard_threshold(db.dd, ts[l - 1]);
        }
    }
    return out;
}

namespace {

std::int64_t quantize_one(double c, double q) {
    const double scaled = c / q;
    if (!std::isfinite(scaled) || std::abs(scaled) > 9.0e18)
        throw std::invalid_argument("quantize: value out of range");
    return std::llround(scaled); // ties away from zero
}

MatI quantize_mat(const MatD& m, double q) {
    MatI out(m.rows, m.cols);
    for (std::size_t i = 0; i < m.v.size(); ++i) out.v[i] = quantize_one(m.v[i], q);
    return out;
}

MatD dequantize_mat(const MatI& m, double q) {
    MatD out(m.rows, m.cols);
    for (std::size_t i = 0; i < m.v.size(); ++i) out.v[i] = q * static_cast<double>(m.v[i]);
    return out;
}

} // namespace

QuantizedPyramid quantize(const SubbandPyramid& p, double q) {
    if (!(q > 0.0)) throw std::invalid_argument("quantize: step must be positive");
    QuantizedPyramid out;
    out.wavelet_id = p.wavelet_id;
    out.levels = p.levels;
    out.orig_width = p.orig_width;
    out.orig_height = p.orig_height;
    out.q = q;
    out.channels.reserve(p.channels.size());
    for (const ChannelPyramid& ch : p.channels) {
        QuantChannel qc;
        qc.ll = quantize_mat(ch.ll, q);
        qc.details.reserve(ch.details.size());
        for (const DetailBands& db : ch.details)
            qc.details.push_back({quantize_mat(db.dh, q), quantize_mat(db.dv, q),
                                  quantize_mat(db.dd, q)});
        out.channels.push_back(std::move(qc));
    }
    return out;
}

SubbandPyramid dequantize(const QuantizedPyramid& pq) {
    if (!(pq.q > 0.0)) throw std::invalid_argument("dequantize: step must be positive");
    SubbandPyramid out;
    out.wavelet_id = pq.wavelet_id;
    out.levels = pq.levels;
    out.orig_width = pq.orig_width;
    out.orig_height = pq.orig_height;
    out.channels.reserve(pq.channels.size());
    for (const QuantChannel& qc : pq.channels) {
        ChannelPyramid ch;
        ch.ll = dequantize_mat(qc.ll, pq.q);
        ch.details.reserve(qc.details.size());
        for (const QuantDetail& db : qc.details)
            ch.details.push_back({dequantize_mat(db.dh, pq.q), dequantize_mat(db.dv, pq.q),
                                  dequantize_mat(db.dd, pq.q)});
        out.channels.push_back(std::move(ch));
    }
    return out;
}

namespace {

constexpr std::uint8_t kMagic[4] = {0x44, 0x48, 0x57, 0x54}; // "DHWT"
constexpr std::uint8_t kVersion = 1;

void put_u8(std::vector<std::uint8_t>& b, std::uint8_t v) { b.push_back(v); }

void put_u32(std::vector<std::uint8_t>& b, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) b.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xff));
}

void put_f64(std::vector<std::uint8_t>& b, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, 8);
    for (int i = 0; i < 8; ++i) b.push_back(static_cast<std::uint8_t>((bits >> (8 * i)) & 0xff));
}

void put_varint(std::vector<std::uint8_t>& b, std::uint64_t v) {
    while (v >= 0x80) {
        b.push_back(static_cast<std::uint8_t>(v) | 0x80);
        v >>= 7;
    }
    b.push_back(static_cast<std::uint8_t>(v));
}

std::uint64_t zigzag(std::int64_t v) {
    return (static_cast<std::uint64_t>(v) << 1) ^ static_cast<std::uint64_t>(v >> 63);
}

std::int64_t unzigzag(std::uint64_t z) {
    return static_cast<std::int64_t>(z >> 1) ^ -static_cast<std::int64_t>(z & 1);
}

struct Reader {
    const std::uint8_t* p;
    std::size_t len;
    std::size_t pos = 0;

    std::uint8_t u8() {
        if (pos + 1 > len) throw ContainerError("container truncated");
        return p[pos++];
    }
    std::uint32_t u32() {
        if (pos + 4 > len) throw ContainerError("container truncated");
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(p[pos + i]) << (8 * i);
        pos += 4;
        return v;
    }
    double f64() {
        if (pos + 8 > len) throw ContainerError("container truncated");
        std::uint64_t bits = 0;
        for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(p[pos + i]) << (8 * i);
        pos += 8;
        double v;
        std::memcpy(&v, &bits, 8);
        return v;
    }
    std::uint64_t varint() {
        std::uint64_t v = 0;
        int shift = 0;
        while (true) {
            if (pos + 1 > len) throw ContainerError("container truncated");
            const std::uint8_t byte = p[pos++];
            if (shift >= 64) throw ContainerError("varint overflow");
            v |= static_cast<std::uint64_t>(byte & 0x7f) << shift;
            if ((byte & 0x80) == 0) return v;
            shift += 7;
        }
    }
};

void encode_subband(std::vector<std::uint8_t>& b, const MatI& m) {
    put_u32(b, static_cast<std::uint32_t>(m.v.size()));
    std::uint64_t run = 0;
    for (std::int64_t c : m.v) {
        if (c == 0) {
            ++run;
        } else {
            put_varint(b, run);
            put_varint(b, zigzag(c));
            run = 0;
        }
    }
    if (run > 0) put_varint(b, run);
}

MatI decode_subband(Reader& r, int rows, int cols) {
    MatI m(rows, cols);
    const std::size_t count = m.v.size();
    if (r.u32() != count) throw ContainerError("subband count mismatch");
    std::size_t n = 0;
    while (n < count) {
        const std::uint64_t run = r.varint();
        if (run > count - n) throw ContainerError("zero run overflows subband");
        n += run; // zeros are already in place
        if (n < count) {
            const std::int64_t v = unzigzag(r.varint());
            if (v == 0) throw ContainerError("explicit zero coefficient");
            m.v[n++] = v;
        }
    }
    return m;
}

} // namespace

CompressedImage encode(const QuantizedPyramid& pq) {
    if (pq.levels < 1 || pq.levels > kMaxLevels) throw std::invalid_argument("encode: bad levels");
    if (pq.channels.empty() || pq.channels.size() > 255)
        throw std::invalid_argument("encode: bad channel count");
    if (pq.wavelet_id.empty() || pq.wavelet_id.size() > 255)
        throw std::invalid_argument("encode: bad wavelet id");
    if (pq.thresholds.size() > 255) throw std::invalid_argument("encode: too many thresholds");

    CompressedImage ci;
    std::vector<std::uint8_t>& b = ci.bytes;
    b.insert(b.end(), kMagic, kMagic + 4);
    put_u8(b, kVersion);
    put_u32(b, static_cast<std::uint32_t>(pq.orig_width));
    put_u32(b, static_cast<std::uint32_t>(pq.orig_height));
    put_u8(b, static_cast<std::uint8_t>(pq.channels.size()));
    put_u8(b, static_cast<std::uint8_t>(pq.levels));
    put_u8(b, static_cast<std::uint8_t>(pq.wavelet_id.size()));
    b.insert(b.end(), pq.wavelet_id.begin(), pq.wavelet_id.end());
    put_f64(b, pq.q);
    put_u8(b, static_cast<std::uint8_t>(pq.thresholds.size()));
    for (double t : pq.thresholds) put_f64(b, t);

    const auto dims = level_dims(pq.orig_width, pq.orig_height, pq.levels);
    for (const QuantChannel& ch : pq.channels) {
        const auto [lw, lh] = dims[pq.levels];
        if (ch.ll.cols != lw || ch.ll.rows != lh ||
            static_cast<int>(ch.details.size()) != pq.levels)
            throw std::invalid_argument("encode: pyramid shape mismatch");
        encode_subband(b, ch.ll);
        for (int l = pq.levels; l >= 1; --l) {
            const QuantDetail& db = ch.details[l - 1];
            if (db.dh.cols != dims[l].first || db.dh.rows != dims[l].second ||
                !db.dv.same_shape(db.dh) || !db.dd.same_shape(db.dh))
                throw std::invalid_argument("encode: pyramid shape mismatch");
            encode_subband(b, db.dh);
            encode_subband(b, db.dv);
            encode_subband(b, db.dd);
        }
    }
    return ci;
}

namespace {

ContainerHeader parse_header(Reader& r) {
    ContainerHeader h;
    for (std::uint8_t c : kMagic) {
        if (r.u8() != c) throw ContainerError("bad magic");
    }
    h.version = r.u8();
    if (h.version != kVersion) throw ContainerError("unsupported version");
    h.width = static_cast<int>(r.u32());
    h.height = static_cast<int>(r.u32());
    h.channels = r.u8();
    h.levels = r.u8();
    if (h.width < 1 || h.height < 1) throw ContainerError("bad dims");
    if (h.channels < 1 || h.channels > 4) throw ContainerError("bad channel count");
    if (h.levels < 1 || h.levels > kMaxLevels) throw ContainerError("bad level count");
    const int idlen = r.u8();
    h.wavelet_id.reserve(idlen);
    for (int i = 0; i < idlen; ++i) h.wavelet_id.push_back(static_cast<char>(r.u8()));
    h.q = r.f64();
    if (!(h.q > 0.0) || !std::isfinite(h.q)) throw ContainerError("bad quantizer step");
    const int tcount = r.u8();
    h.thresholds.reserve(tcount);
    for (int i = 0; i < tcount; ++i) h.thresholds.push_back(r.f64());
    h.header_bytes = r.pos;
    return h;
}

} // namespace

ContainerHeader read_header(const CompressedImage& ci) {
    Reader r{ci.bytes.data(), ci.bytes.size()};
    return parse_header(r);
}

QuantizedPyramid decode(const CompressedImage& ci) {
    Reader r{ci.bytes.data(), ci.bytes.size()};
    const ContainerHeader h = parse_header(r);

    QuantizedPyramid pq;
    pq.wavelet_id = h.wavelet_id;
    pq.levels = h.levels;
    pq.orig_width = h.width;
    pq.orig_height = h.height;
    pq.q = h.q;
    pq.thresholds = h.thresholds;

    const auto dims = level_dims(h.width, h.height, h.levels);
    pq.channels.resize(h.channels);
    for (QuantChannel& ch : pq.channels) {
        ch.ll = decode_subband(r, dims[h.levels].second, dims[h.levels].first);
        ch.details.resize(h.levels);
        for (int l = h.levels; l >= 1; --l) {
            QuantDetail& db = ch.details[l - 1];
            db.dh = decode_subband(r, dims[l].second, dims[l].first);
            db.dv = decode_subband(r, dims[l].second, dims[l].first);
            db.dd = decode_subband(r, dims[l].second, dims[l].first);
        }
    }
    if (r.pos != ci.bytes.size()) throw ContainerError("trailing bytes after payload");
    return pq;
}

void save_container(const CompressedImage& ci, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ContainerError("cannot open for writing: " + path);
    out.write(reinterpret_cast<const char*>(ci.bytes.data()),
              static_cast<std::streamsize>(ci.bytes.size()));
    if (!out) throw ContainerError("write failed: " + path);
}

CompressedImage load_container(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ContainerError("cannot open: " + path);
    CompressedImage ci;
    ci.bytes.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    if (in.bad()) throw ContainerError("read failed: " + path);
    return ci;
}

namespace {

double pyramid_energy(const SubbandPyramid& p) {
    double e = 0.0;
    for (const ChannelPyramid& ch : p.channels) {
        for (double v : ch.ll.v) e += v * v;
        for (const DetailBands& db : ch.details) {
            for (double v : db.dh.v) e += v * v;
            for (double v : db.dv.v) e += v * v;
            for (double v : db.dd.v) e += v * v;
        }
    }
    return e;
}

} // namespace

std::pair<CompressedImage, QualityReport> compress_image(const Image& img,
                                                         const std::string& wavelet_id,
                                                         int levels,
                                                         const ThresholdSchedule& schedule,
                                                         double q, int loop_index) {
    const FilterPair filter = filter_by_id(wavelet_id);
    const SubbandPyramid original = decompose(img, filter, levels);
    SubbandPyramid kept = threshold_pyramid(original, schedule, loop_index);
    QuantizedPyramid pq = quantize(kept, q);
    pq.thresholds = schedule_thresholds(schedule, levels, loop_index);
    CompressedImage ci = encode(pq);

    QualityReport rep;
    const QuantizedPyramid decoded = decode(ci);
    const SubbandPyramid lossy = dequantize(decoded);
    const Image rebuilt = reconstruct(lossy, filter);
    rep.mse = mse(img, rebuilt);
    rep.psnr = psnr(rep.mse);
    rep.cr = cr(decoded);
    rep.bpp = bpp(rep.cr, img.channels());
    if (pyramid_energy(original) > 0.0) {
        auto [retained, zeros] = energy_stats(original, lossy);
        // quantizer rounding can push coefficient energy slightly past the
        // original; the report caps at 100
        rep.energy_retained = retained > 100.0 ? 100.0 : retained;
        rep.zero_share = zeros;
    } else {
        rep.energy_retained = 100.0;
        rep.zero_share = 100.0 - rep.cr;
    }
    rep.container_bytes = ci.bytes.size();
    rep.raw_bytes = static_cast<std::size_t>(img.width) * img.height * img.channels();
    rep.byte_cr = 100.0 * static_cast<double>(rep.container_bytes) /
                  static_cast<double>(rep.raw_bytes);
    return {std::move(ci), rep};
}

Image decompress_image(const CompressedImage& ci) {
    const QuantizedPyramid pq = decode(ci);
    const FilterPair filter = filter_by_id(pq.wavelet_id);
    return reconstruct(dequantize(pq), filter);
}

std::vector<QualityReport> compression_loop(const Image& img, const std::string& wavelet_id,
                                            int levels, const ThresholdSchedule& schedule,
                                            double q) {
    std::vector<QualityReport> reports;
    reports.reserve(schedule.loops);
    for (int loop = 1; loop <= schedule.loops; ++loop)
        reports.push_back(compress_image(img, wavelet_id, levels, schedule, q, loop).second);
    return reports;
}

} // namespace dhwt
