//! Structural front-end of the pipeline: tiling an image into fixed-size
//! patches plus a global thumbnail, the space-to-depth pixel shuffle, and the
//! two-layer adapter that maps visual channels onto the text width.
//!
//! Images come in as binary PPM (P6) or PGM (P5), or are synthesized from a
//! seed. No real visual encoder lives here; a seeded linear embedding stands
//! in for it so the fusion pipeline can be driven end to end.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::matrix::{FeatureMatrix, Seed};

/// H x W x 3 image with values in [0, 1], stored row-major by pixel.
#[derive(Debug, Clone, PartialEq)]
pub struct ImageTensor {
    height: usize,
    width: usize,
    data: Vec<f64>,
}

impl ImageTensor {
    pub const CHANNELS: usize = 3;

    pub fn new(height: usize, width: usize, data: Vec<f64>) -> Result<Self> {
        if height == 0 || width == 0 {
            return Err(Error::InvalidInput(format!(
                "image must have positive area, got {height}x{width}"
            )));
        }
        if data.len() != height * width * Self::CHANNELS {
            return Err(Error::Shape(format!(
                "expected {} values for {height}x{width}x3, got {}",
                height * width * Self::CHANNELS,
                data.len()
            )));
        }
        if let Some(&v) = data.iter().find(|v| !v.is_finite() || **v < 0.0 || **v > 1.0) {
            return Err(Error::InvalidInput(format!(
                "pixel value {v} outside [0, 1]"
            )));
        }
        Ok(Self {
            height,
            width,
            data,
        })
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn get(&self, y: usize, x: usize, c: usize) -> f64 {
        self.data[(y * self.width + x) * Self::CHANNELS + c]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    /// Reinterpret as a 3-channel feature map.
    pub fn to_feature_map(&self) -> FeatureMap {
        FeatureMap {
            height: self.height,
            width: self.width,
            channels: Self::CHANNELS,
            data: self.data.clone(),
        }
    }
}

/// H x W x C tensor of finite reals; the carrier for pixel shuffle.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureMap {
    height: usize,
    width: usize,
    channels: usize,
    data: Vec<f64>,
}

impl FeatureMap {
    pub fn new(height: usize, width: usize, channels: usize, data: Vec<f64>) -> Result<Self> {
        if height == 0 || width == 0 || channels == 0 {
            return Err(Error::Shape(format!(
                "feature map must be non-degenerate, got {height}x{width}x{channels}"
            )));
        }
        if data.len() != height * width * channels {
            return Err(Error::Shape(format!(
                "expected {} values for {height}x{width}x{channels}, got {}",
                height * width * channels,
                data.len()
            )));
        }
        if data.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidInput("non-finite feature value".into()));
        }
        Ok(Self {
            height,
            width,
            channels,
            data,
        })
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn channels(&self) -> usize {
        self.channels
    }

    pub fn get(&self, y: usize, x: usize, c: usize) -> f64 {
        self.data[(y * self.width + x) * self.channels + c]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    /// Flatten to a token matrix: one row per spatial cell (row-major), one
    /// column per channel.
    pub fn to_token_matrix(&self) -> Result<FeatureMatrix> {
        FeatureMatrix::from_vec(self.height * self.width, self.channels, self.data.clone())
    }
}

/// Ordered local tiles plus the downsampled whole image.
#[derive(Debug, Clone, PartialEq)]
pub struct PatchSet {
    /// Non-overlapping tiles in row-major order; edge tiles are zero-padded.
    pub patches: Vec<ImageTensor>,
    /// Area-averaged thumbnail of the full image.
    pub global: ImageTensor,
    /// Tile grid as (rows, cols).
    pub grid: (usize, usize),
}

impl PatchSet {
    pub fn patch_count(&self) -> usize {
        self.patches.len()
    }
}

/// Area-average `img` down (or up) to `out_h x out_w`. Each output pixel is
/// the mean of the input pixels whose index block it covers, so exact cases
/// (integer ratios) are reproduced bit-for-bit by a hand computation.
pub fn downsample_area(img: &ImageTensor, out_h: usize, out_w: usize) -> Result<ImageTensor> {
    if out_h == 0 || out_w == 0 {
        return Err(Error::InvalidInput("thumbnail must have positive area".into()));
    }
    let (h, w) = (img.height, img.width);
    let window = |i: usize, n: usize, out_n: usize| {
        let start = i * n / out_n;
        let mut end = (i + 1) * n / out_n;
        if end <= start {
            end = start + 1;
        }
        (start, end.min(n))
    };
    let mut data = Vec::with_capacity(out_h * out_w * ImageTensor::CHANNELS);
    for i in 0..out_h {
        let (y0, y1) = window(i, h, out_h);
        for j in 0..out_w {
            let (x0, x1) = window(j, w, out_w);
            let count = ((y1 - y0) * (x1 - x0)) as f64;
            for c in 0..ImageTensor::CHANNELS {
                let mut acc = 0.0;
                for y in y0..y1 {
                    for x in x0..x1 {
                        acc += img.get(y, x, c);
                    }
                }
                data.push(acc / count);
            }
        }
    }
    ImageTensor::new(out_h, out_w, data)
}

/// Split `img` into non-overlapping `tile x tile` patches (row-major, edge
/// tiles zero-padded) and attach a `thumb x thumb` area-averaged global view.
/// The patch count is `ceil(H/tile) * ceil(W/tile)`.
pub fn adaptive_encode(img: &ImageTensor, tile: usize, thumb: usize) -> Result<PatchSet> {
    if tile == 0 {
        return Err(Error::InvalidInput("tile size must be >= 1".into()));
    }
    let tiles_y = img.height.div_ceil(tile);
    let tiles_x = img.width.div_ceil(tile);
    let mut patches = Vec::with_capacity(tiles_y * tiles_x);
    for ty in 0..tiles_y {
        for tx in 0..tiles_x {
            let mut data = vec![0.0; tile * tile * ImageTensor::CHANNELS];
            for dy in 0..tile {
                let y = ty * tile + dy;
                if y >= img.height {
                    break;
                }
                for dx in 0..tile {
                    let x = tx * tile + dx;
                    if x >= img.width {
                        break;
                    }
                    for c in 0..ImageTensor::CHANNELS {
                        data[(dy * tile + dx) * ImageTensor::CHANNELS + c] = img.get(y, x, c);
                    }
                }
            }
            patches.push(ImageTensor::new(tile, tile, data)?);
        }
    }
    Ok(PatchSet {
        patches,
        global: downsample_area(img, thumb, thumb)?,
        grid: (tiles_y, tiles_x),
    })
}

/// Space-to-depth rearrangement: each `r x r` spatial block becomes `r*r`
/// extra channels, shrinking H and W by `r`. Output channel layout is
/// `c_in * r^2 + dy * r + dx` (original channel major, then block position in
/// row-major order). Pure permutation of values; [`pixel_unshuffle`] is its
/// exact inverse.
pub fn pixel_shuffle(feat: &FeatureMap, r: usize) -> Result<FeatureMap> {
    if r == 0 {
        return Err(Error::Shape("shuffle factor must be >= 1".into()));
    }
    if feat.height % r != 0 || feat.width % r != 0 {
        return Err(Error::Shape(format!(
            "factor {r} does not divide {}x{}",
            feat.height, feat.width
        )));
    }
    let (oh, ow, oc) = (feat.height / r, feat.width / r, feat.channels * r * r);
    let mut data = vec![0.0; feat.data.len()];
    for y in 0..oh {
        for x in 0..ow {
            for c in 0..feat.channels {
                for dy in 0..r {
                    for dx in 0..r {
                        let out_c = c * r * r + dy * r + dx;
                        data[(y * ow + x) * oc + out_c] = feat.get(y * r + dy, x * r + dx, c);
                    }
                }
            }
        }
    }
    FeatureMap::new(oh, ow, oc, data)
}

/// Exact inverse of [`pixel_shuffle`] with the same factor.
pub fn pixel_unshuffle(feat: &FeatureMap, r: usize) -> Result<FeatureMap> {
    if r == 0 {
        return Err(Error::Shape("shuffle factor must be >= 1".into()));
    }
    if feat.channels % (r * r) != 0 {
        return Err(Error::Shape(format!(
            "channel count {} is not a multiple of {}",
            feat.channels,
            r * r
        )));
    }
    let (oh, ow, oc) = (feat.height * r, feat.width * r, feat.channels / (r * r));
    let mut data = vec![0.0; feat.data.len()];
    for y in 0..feat.height {
        for x in 0..feat.width {
            for c in 0..oc {
                for dy in 0..r {
                    for dx in 0..r {
                        let in_c = c * r * r + dy * r + dx;
                        data[((y * r + dy) * ow + (x * r + dx)) * oc + c] =
                            feat.get(y, x, in_c);
                    }
                }
            }
        }
    }
    FeatureMap::new(oh, ow, oc, data)
}

/// Two affine layers with a ReLU between them.
#[derive(Debug, Clone, PartialEq)]
pub struct AdapterWeights {
    pub w1: FeatureMatrix,
    pub b1: Vec<f64>,
    pub w2: FeatureMatrix,
    pub b2: Vec<f64>,
}

impl AdapterWeights {
    pub fn new(w1: FeatureMatrix, b1: Vec<f64>, w2: FeatureMatrix, b2: Vec<f64>) -> Result<Self> {
        if w1.cols() != b1.len() || w1.cols() != w2.rows() || w2.cols() != b2.len() {
            return Err(Error::Shape(format!(
                "adapter shapes do not chain: w1 {}x{}, b1 {}, w2 {}x{}, b2 {}",
                w1.rows(),
                w1.cols(),
                b1.len(),
                w2.rows(),
                w2.cols(),
                b2.len()
            )));
        }
        if b1.iter().chain(b2.iter()).any(|v| !v.is_finite()) {
            return Err(Error::InvalidInput("non-finite bias".into()));
        }
        Ok(Self { w1, b1, w2, b2 })
    }

    /// Seeded random initialization, entries scaled by 1/sqrt(fan_in).
    pub fn seeded(input_dim: usize, hidden_dim: usize, output_dim: usize, seed: Seed) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.0);
        let mut draw = |rows: usize, cols: usize, scale: f64| -> Result<FeatureMatrix> {
            let data = (0..rows * cols)
                .map(|_| {
                    let z: f64 = StandardNormal.sample(&mut rng);
                    z * scale
                })
                .collect();
            FeatureMatrix::from_vec(rows, cols, data)
        };
        let w1 = draw(input_dim, hidden_dim, 1.0 / (input_dim as f64).sqrt())?;
        let w2 = draw(hidden_dim, output_dim, 1.0 / (hidden_dim as f64).sqrt())?;
        Self::new(w1, vec![0.0; hidden_dim], w2, vec![0.0; output_dim])
    }

    /// Identity layers (square, zero bias); reproduces nonnegative inputs.
    pub fn identity(dim: usize) -> Result<Self> {
        Self::new(
            FeatureMatrix::identity(dim)?,
            vec![0.0; dim],
            FeatureMatrix::identity(dim)?,
            vec![0.0; dim],
        )
    }

    pub fn input_dim(&self) -> usize {
        self.w1.rows()
    }

    pub fn hidden_dim(&self) -> usize {
        self.w1.cols()
    }

    pub fn output_dim(&self) -> usize {
        self.w2.cols()
    }
}

/// Run the adapter: `relu(x W1 + b1) W2 + b2`, row count preserved.
pub fn mlp_adapter(feat: &FeatureMatrix, w: &AdapterWeights) -> Result<FeatureMatrix> {
    if feat.cols() != w.input_dim() {
        return Err(Error::Shape(format!(
            "adapter expects {} input columns, got {}",
            w.input_dim(),
            feat.cols()
        )));
    }
    let (hidden_dim, out_dim) = (w.hidden_dim(), w.output_dim());
    let mut out = Vec::with_capacity(feat.rows() * out_dim);
    let mut hidden = vec![0.0; hidden_dim];
    for r in 0..feat.rows() {
        let x = feat.row(r);
        for (h_idx, h) in hidden.iter_mut().enumerate() {
            let mut acc = w.b1[h_idx];
            for (c, &xc) in x.iter().enumerate() {
                acc += xc * w.w1.get(c, h_idx);
            }
            *h = acc.max(0.0);
        }
        for o in 0..out_dim {
            let mut acc = w.b2[o];
            for (h_idx, &h) in hidden.iter().enumerate() {
                acc += h * w.w2.get(h_idx, o);
            }
            out.push(acc);
        }
    }
    FeatureMatrix::from_vec(feat.rows(), out_dim, out)
}

/// Deterministic synthetic image with uniform [0, 1) pixels.
pub fn seeded_image(height: usize, width: usize, seed: Seed) -> Result<ImageTensor> {
    if height == 0 || width == 0 {
        return Err(Error::InvalidInput("image must have positive area".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed.0);
    let data = (0..height * width * ImageTensor::CHANNELS)
        .map(|_| {
            // keep strictly below 1.0 so the [0,1] invariant is safe
            let v: f64 = rng.gen();
            v.min(1.0 - f64::EPSILON)
        })
        .collect();
    ImageTensor::new(height, width, data)
}

/// Decode a binary PPM (P6) or PGM (P5) image; PGM gray values are replicated
/// across the three channels. Only 8-bit depth (maxval <= 255) is supported.
pub fn decode_pnm(bytes: &[u8]) -> Result<ImageTensor> {
    let mut pos = 0usize;
    let fail = |pos: usize, msg: &str| Error::Parse {
        offset: pos,
        message: msg.to_string(),
    };

    if bytes.len() < 2 {
        return Err(fail(0, "input shorter than a magic number"));
    }
    let channels = match &bytes[..2] {
        b"P6" => 3usize,
        b"P5" => 1usize,
        _ => return Err(fail(0, "expected P6 or P5 magic")),
    };
    pos = 2;

    // whitespace- and comment-tolerant ASCII integer reader
    let mut read_int = |pos: &mut usize| -> Result<usize> {
        loop {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
            if *pos < bytes.len() && bytes[*pos] == b'#' {
                while *pos < bytes.len() && bytes[*pos] != b'\n' {
                    *pos += 1;
                }
                continue;
            }
            break;
        }
        let start = *pos;
        while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
            *pos += 1;
        }
        if *pos == start {
            return Err(fail(start, "expected an ASCII integer"));
        }
        std::str::from_utf8(&bytes[start..*pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| fail(start, "integer out of range"))
    };

    let width = read_int(&mut pos)?;
    let height = read_int(&mut pos)?;
    let maxval = read_int(&mut pos)?;
    if width == 0 || height == 0 {
        return Err(fail(pos, "zero-area image"));
    }
    if maxval == 0 || maxval > 255 {
        return Err(fail(pos, "maxval must be in 1..=255 (16-bit unsupported)"));
    }
    if pos >= bytes.len() || !bytes[pos].is_ascii_whitespace() {
        return Err(fail(pos, "expected single whitespace before pixel data"));
    }
    pos += 1;

    let need = width * height * channels;
    if bytes.len() - pos < need {
        return Err(fail(
            bytes.len(),
            &format!("pixel data truncated: need {need} bytes"),
        ));
    }
    let raw = &bytes[pos..pos + need];
    let scale = 1.0 / maxval as f64;
    let mut data = Vec::with_capacity(width * height * ImageTensor::CHANNELS);
    match channels {
        3 => data.extend(raw.iter().map(|&b| (b as f64 * scale).min(1.0))),
        _ => {
            for &b in raw {
                let v = (b as f64 * scale).min(1.0);
                data.extend_from_slice(&[v, v, v]);
            }
        }
    }
    ImageTensor::new(height, width, data)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ramp_image(h: usize, w: usize) -> ImageTensor {
        let scale = 1.0 / (h * w * 3) as f64;
        let data = (0..h * w * 3).map(|i| i as f64 * scale).collect();
        ImageTensor::new(h, w, data).unwrap()
    }

    #[test]
    fn single_tile_when_image_matches_tile_size() {
        let img = seeded_image(448, 448, Seed(1)).unwrap();
        let set = adaptive_encode(&img, 448, 448).unwrap();
        assert_eq!(set.patch_count(), 1);
        assert_eq!(set.grid, (1, 1));
        assert_eq!(set.patches[0].as_slice(), img.as_slice());
        assert_eq!(set.global.height(), 448);
    }

    #[test]
    fn four_tiles_for_double_size() {
        let img = seeded_image(896, 896, Seed(2)).unwrap();
        let set = adaptive_encode(&img, 448, 448).unwrap();
        assert_eq!(set.patch_count(), 4);
        assert_eq!(set.grid, (2, 2));
    }

    #[test]
    fn edge_tile_is_zero_padded_exactly() {
        let img = seeded_image(500, 448, Seed(3)).unwrap();
        let set = adaptive_encode(&img, 448, 448).unwrap();
        assert_eq!(set.patch_count(), 2);
        let second = &set.patches[1];
        // rows 0..52 carry image rows 448..500, everything below is zero
        for y in 0..52 {
            for x in 0..448 {
                for c in 0..3 {
                    assert_eq!(second.get(y, x, c), img.get(448 + y, x, c));
                }
            }
        }
        for y in 52..448 {
            for x in 0..448 {
                for c in 0..3 {
                    assert_eq!(second.get(y, x, c), 0.0);
                }
            }
        }
    }

    #[test]
    fn patch_count_formula_holds_for_random_shapes() {
        let mut rng_state = 0x9e3779b97f4a7c15u64;
        let mut next = || {
            rng_state = rng_state.wrapping_mul(6364136223846793005).wrapping_add(1);
            (rng_state >> 33) as usize
        };
        for _ in 0..500 {
            let h = next() % 50 + 1;
            let w = next() % 50 + 1;
            let p = next() % 16 + 1;
            let img = ImageTensor::new(h, w, vec![0.5; h * w * 3]).unwrap();
            let set = adaptive_encode(&img, p, 4).unwrap();
            assert_eq!(set.patch_count(), h.div_ceil(p) * w.div_ceil(p));
        }
    }

    #[test]
    fn thumbnail_is_exact_block_mean() {
        let img = ramp_image(4, 4);
        let thumb = downsample_area(&img, 2, 2).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                for c in 0..3 {
                    let mean = (img.get(2 * i, 2 * j, c)
                        + img.get(2 * i, 2 * j + 1, c)
                        + img.get(2 * i + 1, 2 * j, c)
                        + img.get(2 * i + 1, 2 * j + 1, c))
                        / 4.0;
                    assert!((thumb.get(i, j, c) - mean).abs() < 1e-15);
                }
            }
        }
    }

    #[test]
    fn shuffle_factor_one_is_identity() {
        let fm = seeded_image(4, 6, Seed(4)).unwrap().to_feature_map();
        let out = pixel_shuffle(&fm, 1).unwrap();
        assert_eq!(out, fm);
    }

    #[test]
    fn shuffle_gathers_blocks_in_row_major_order() {
        let data: Vec<f64> = (0..16).map(|i| i as f64).collect();
        let fm = FeatureMap::new(4, 4, 1, data).unwrap();
        let out = pixel_shuffle(&fm, 2).unwrap();
        assert_eq!(
            (out.height(), out.width(), out.channels()),
            (2, 2, 4)
        );
        // cell (0,0) holds the top-left 2x2 block in row-major order
        let got: Vec<f64> = (0..4).map(|c| out.get(0, 0, c)).collect();
        assert_eq!(got, vec![0.0, 1.0, 4.0, 5.0]);
    }

    #[test]
    fn shuffle_round_trip_is_bit_exact() {
        let fm = seeded_image(8, 8, Seed(5)).unwrap().to_feature_map();
        let back = pixel_unshuffle(&pixel_shuffle(&fm, 2).unwrap(), 2).unwrap();
        assert_eq!(back, fm);
    }

    #[test]
    fn shuffle_rejects_non_dividing_factor() {
        let fm = FeatureMap::new(4, 6, 1, vec![0.0; 24]).unwrap();
        assert!(matches!(pixel_shuffle(&fm, 4), Err(Error::Shape(_))));
    }

    #[test]
    fn adapter_zero_weights_give_zero_output() {
        let w = AdapterWeights::new(
            FeatureMatrix::zeros(4, 3).unwrap(),
            vec![0.0; 3],
            FeatureMatrix::zeros(3, 2).unwrap(),
            vec![0.0; 2],
        )
        .unwrap();
        let x = crate::matrix::seeded_random_matrix(5, 4, Seed(6)).unwrap();
        let y = mlp_adapter(&x, &w).unwrap();
        assert!(y.as_slice().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn adapter_identity_reproduces_nonnegative_input() {
        let w = AdapterWeights::identity(4).unwrap();
        let x = FeatureMatrix::from_rows(&[&[0.5, 0.0, 2.0, 1.25]]).unwrap();
        let y = mlp_adapter(&x, &w).unwrap();
        assert_eq!(y.as_slice(), x.as_slice());
    }

    #[test]
    fn adapter_matches_straight_line_oracle() {
        let w = AdapterWeights::seeded(16, 8, 4, Seed(7)).unwrap();
        let x = crate::matrix::seeded_random_matrix(4, 16, Seed(8)).unwrap();
        let y = mlp_adapter(&x, &w).unwrap();
        assert_eq!((y.rows(), y.cols()), (4, 4));
        for r in 0..4 {
            for o in 0..4 {
                let mut expected = w.b2[o];
                for h in 0..8 {
                    let mut pre = w.b1[h];
                    for c in 0..16 {
                        pre += x.get(r, c) * w.w1.get(c, h);
                    }
                    expected += pre.max(0.0) * w.w2.get(h, o);
                }
                assert!((y.get(r, o) - expected).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn adapter_rejects_width_mismatch() {
        let w = AdapterWeights::seeded(16, 8, 4, Seed(7)).unwrap();
        let x = crate::matrix::seeded_random_matrix(2, 8, Seed(9)).unwrap();
        assert!(mlp_adapter(&x, &w).is_err());
    }

    #[test]
    fn decode_p6_round_trip() {
        let mut bytes = b"P6\n# comment\n2 1\n255\n".to_vec();
        bytes.extend_from_slice(&[255, 0, 0, 0, 255, 0]);
        let img = decode_pnm(&bytes).unwrap();
        assert_eq!((img.height(), img.width()), (1, 2));
        assert_eq!(img.get(0, 0, 0), 1.0);
        assert_eq!(img.get(0, 0, 1), 0.0);
        assert_eq!(img.get(0, 1, 1), 1.0);
    }

    #[test]
    fn decode_p5_replicates_gray() {
        let mut bytes = b"P5 2 2 100\n".to_vec();
        bytes.extend_from_slice(&[0, 50, 100, 25]);
        let img = decode_pnm(&bytes).unwrap();
        assert_eq!(img.get(0, 1, 0), 0.5);
        assert_eq!(img.get(0, 1, 2), 0.5);
        assert_eq!(img.get(1, 0, 0), 1.0);
    }

    #[test]
    fn decode_reports_offset_on_truncation() {
        let bytes = b"P6 2 2 255\n\x00\x01".to_vec();
        match decode_pnm(&bytes) {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, bytes.len()),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn decode_rejects_unknown_magic() {
        assert!(matches!(
            decode_pnm(b"P3 1 1 255 0 0 0"),
            Err(Error::Parse { offset: 0, .. })
        ));
    }

    #[test]
    fn seeded_image_is_deterministic_and_in_range() {
        let a = seeded_image(6, 5, Seed(11)).unwrap();
        let b = seeded_image(6, 5, Seed(11)).unwrap();
        assert_eq!(a, b);
        assert!(a.as_slice().iter().all(|&v| (0.0..1.0).contains(&v)));
    }
}
