//! Minimal polygon meshes with ASCII OBJ output.

use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use crate::error::Result;

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Mesh {
    pub vertices: Vec<[f64; 3]>,
    /// Zero-based vertex indices.
    pub faces: Vec<Vec<usize>>,
    /// Polylines, zero-based.
    pub lines: Vec<Vec<usize>>,
}

impl Mesh {
    /// Append another mesh, shifting its indices.
    pub fn append(&mut self, other: &Mesh) {
        let off = self.vertices.len();
        self.vertices.extend_from_slice(&other.vertices);
        self.faces.extend(other.faces.iter().map(|f| f.iter().map(|i| i + off).collect()));
        self.lines.extend(other.lines.iter().map(|l| l.iter().map(|i| i + off).collect()));
    }

    /// Polar grid mesh: `ring(i, j)` gives the vertex at ring `i`
    /// (`1..=rings`) and spoke `j`, with `center` at the middle.
    pub fn polar<F: FnMut(usize, usize) -> Result<[f64; 3]>>(
        center: [f64; 3],
        rings: usize,
        spokes: usize,
        mut ring: F,
    ) -> Result<Mesh> {
        let mut m = Mesh { vertices: vec![center], ..Default::default() };
        for i in 1..=rings {
            for j in 0..spokes {
                m.vertices.push(ring(i, j)?);
            }
        }
        let idx = |i: usize, j: usize| 1 + (i - 1) * spokes + (j % spokes);
        for j in 0..spokes {
            m.faces.push(vec![0, idx(1, j), idx(1, j + 1)]);
        }
        for i in 1..rings {
            for j in 0..spokes {
                m.faces.push(vec![idx(i, j), idx(i + 1, j), idx(i + 1, j + 1), idx(i, j + 1)]);
            }
        }
        Ok(m)
    }

    pub fn to_obj(&self, comment: &str) -> String {
        let mut s = String::new();
        for line in comment.lines() {
            let _ = writeln!(s, "# {line}");
        }
        for v in &self.vertices {
            let _ = writeln!(s, "v {:.12} {:.12} {:.12}", v[0], v[1], v[2]);
        }
        for f in &self.faces {
            s.push('f');
            for i in f {
                let _ = write!(s, " {}", i + 1);
            }
            s.push('\n');
        }
        for l in &self.lines {
            s.push('l');
            for i in l {
                let _ = write!(s, " {}", i + 1);
            }
            s.push('\n');
        }
        s
    }

    pub fn write_obj(&self, path: &Path, comment: &str) -> Result<()> {
        let mut f = std::fs::File::create(path)?;
        f.write_all(self.to_obj(comment).as_bytes())?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polar_mesh_counts() {
        let m = Mesh::polar([0.0; 3], 3, 8, |i, j| Ok([i as f64, j as f64, 0.0])).unwrap();
        assert_eq!(m.vertices.len(), 1 + 24);
        assert_eq!(m.faces.len(), 8 + 16);
        let obj = m.to_obj("test");
        assert!(obj.starts_with("# test\nv 0.000000000000"));
        assert_eq!(obj.lines().filter(|l| l.starts_with("f ")).count(), 24);
        assert!(m.faces.iter().flatten().all(|&i| i < m.vertices.len()));
    }

    #[test]
    fn append_shifts_indices() {
        let mut a = Mesh { vertices: vec![[0.0; 3]; 2], faces: vec![], lines: vec![vec![0, 1]] };
        let b = a.clone();
        a.append(&b);
        assert_eq!(a.lines, vec![vec![0, 1], vec![2, 3]]);
    }
}
