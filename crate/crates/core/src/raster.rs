//! In-memory RGB image representation and pixel-level plumbing.
//!
//! Pixels are `f64` in `[0, 1]`, row-major, three channels. Files are
//! 8-bit RGB PNG: values are divided by 255 at load and re-quantized
//! with round-half-up on save.

use std::path::{Path, PathBuf};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum RasterError {
    #[error("image decode error at {path}: {source}")]
    Decode {
        path: PathBuf,
        #[source]
        source: image::ImageError,
    },
    #[error("image encode error at {path}: {source}")]
    Encode {
        path: PathBuf,
        #[source]
        source: image::ImageError,
    },
    #[error("dimension mismatch: {0}x{1} vs {2}x{3}")]
    DimensionMismatch(usize, usize, usize, usize),
    #[error("pixel value {0} outside [0, 1]")]
    OutOfRange(f64),
    #[error("invalid image size {0}x{1}")]
    InvalidSize(usize, usize),
}

/// H x W x 3 image with values in [0, 1].
#[derive(Debug, Clone, PartialEq)]
pub struct ImageTensor {
    height: usize,
    width: usize,
    pixels: Vec<f64>,
}

impl ImageTensor {
    pub fn new(height: usize, width: usize, pixels: Vec<f64>) -> Result<Self, RasterError> {
        if height == 0 || width == 0 {
            return Err(RasterError::InvalidSize(height, width));
        }
        assert_eq!(pixels.len(), height * width * 3, "pixel buffer length");
        for &p in &pixels {
            if !(0.0..=1.0).contains(&p) {
                return Err(RasterError::OutOfRange(p));
            }
        }
        Ok(ImageTensor { height, width, pixels })
    }

    /// Constant-valued image.
    pub fn constant(height: usize, width: usize, value: f64) -> Self {
        ImageTensor::new(height, width, vec![value; height * width * 3])
            .expect("constant in range")
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn pixels(&self) -> &[f64] {
        &self.pixels
    }

    pub fn pixels_mut(&mut self) -> &mut [f64] {
        &mut self.pixels
    }

    #[inline]
    pub fn get(&self, y: usize, x: usize, c: usize) -> f64 {
        self.pixels[(y * self.width + x) * 3 + c]
    }

    #[inline]
    pub fn set(&mut self, y: usize, x: usize, c: usize, v: f64) {
        self.pixels[(y * self.width + x) * 3 + c] = v;
    }

    pub fn same_size(&self, other: &ImageTensor) -> bool {
        self.height == other.height && self.width == other.width
    }

    /// Per-channel means over the whole image.
    pub fn channel_means(&self) -> [f64; 3] {
        let mut sums = [0.0f64; 3];
        for chunk in self.pixels.chunks_exact(3) {
            sums[0] += chunk[0];
            sums[1] += chunk[1];
            sums[2] += chunk[2];
        }
        let n = (self.height * self.width) as f64;
        [sums[0] / n, sums[1] / n, sums[2] / n]
    }

    pub fn load_png(path: &Path) -> Result<Self, RasterError> {
        let img = image::open(path)
            .map_err(|source| RasterError::Decode { path: path.to_path_buf(), source })?
            .to_rgb8();
        let (w, h) = (img.width() as usize, img.height() as usize);
        let mut pixels = Vec::with_capacity(h * w * 3);
        for p in img.pixels() {
            pixels.push(f64::from(p.0[0]) / 255.0);
            pixels.push(f64::from(p.0[1]) / 255.0);
            pixels.push(f64::from(p.0[2]) / 255.0);
        }
        ImageTensor::new(h, w, pixels)
    }

    pub fn save_png(&self, path: &Path) -> Result<(), RasterError> {
        let mut buf = image::RgbImage::new(self.width as u32, self.height as u32);
        for y in 0..self.height {
            for x in 0..self.width {
                let px = [
                    quantize_u8(self.get(y, x, 0)),
                    quantize_u8(self.get(y, x, 1)),
                    quantize_u8(self.get(y, x, 2)),
                ];
                buf.put_pixel(x as u32, y as u32, image::Rgb(px));
            }
        }
        buf.save(path)
            .map_err(|source| RasterError::Encode { path: path.to_path_buf(), source })
    }

    /// Snap every value to the 8-bit grid (k/255). Generative stubs use this
    /// so their outputs match what a real decoder would produce.
    pub fn quantized(&self) -> ImageTensor {
        let pixels = self.pixels.iter().map(|&v| f64::from(quantize_u8(v)) / 255.0).collect();
        ImageTensor { height: self.height, width: self.width, pixels }
    }
}

/// Round-half-up quantization of a [0, 1] value to 8 bits.
pub fn quantize_u8(v: f64) -> u8 {
    let scaled = (v.clamp(0.0, 1.0) * 255.0 + 0.5).floor();
    scaled.min(255.0) as u8
}

/// Bilinear resampling. Output range stays within the input range because
/// every output pixel is a convex combination of input pixels.
pub fn resize(img: &ImageTensor, new_h: usize, new_w: usize) -> Result<ImageTensor, RasterError> {
    if new_h == 0 || new_w == 0 {
        return Err(RasterError::InvalidSize(new_h, new_w));
    }
    if new_h == img.height() && new_w == img.width() {
        return Ok(img.clone());
    }
    let (h, w) = (img.height(), img.width());
    let mut out = vec![0.0f64; new_h * new_w * 3];
    // Pixel-center alignment: output center (i + 0.5) / new maps to input
    // coordinate (i + 0.5) * old / new - 0.5.
    let sy = h as f64 / new_h as f64;
    let sx = w as f64 / new_w as f64;
    for oy in 0..new_h {
        let fy = ((oy as f64 + 0.5) * sy - 0.5).clamp(0.0, (h - 1) as f64);
        let y0 = fy.floor() as usize;
        let y1 = (y0 + 1).min(h - 1);
        let wy = fy - y0 as f64;
        for ox in 0..new_w {
            let fx = ((ox as f64 + 0.5) * sx - 0.5).clamp(0.0, (w - 1) as f64);
            let x0 = fx.floor() as usize;
            let x1 = (x0 + 1).min(w - 1);
            let wx = fx - x0 as f64;
            for c in 0..3 {
                let top = img.get(y0, x0, c) * (1.0 - wx) + img.get(y0, x1, c) * wx;
                let bottom = img.get(y1, x0, c) * (1.0 - wx) + img.get(y1, x1, c) * wx;
                out[(oy * new_w + ox) * 3 + c] = top * (1.0 - wy) + bottom * wy;
            }
        }
    }
    ImageTensor::new(new_h, new_w, out)
}
