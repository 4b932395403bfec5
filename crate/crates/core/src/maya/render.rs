use super::MayaDiagram;

const FILLED: char = '■';
const EMPTY: char = '□';
const ORIGIN: char = '|';

impl MayaDiagram {
    /// Glyph run over `[from, to)` with a bar between sites `-1` and `0`.
    pub fn render_range(&self, from: i64, to: i64) -> String {
        let mut s = String::new();
        for x in from..to {
            if x == 0 {
                s.push(ORIGIN);
            }
            s.push(if self.contains(x) { FILLED } else { EMPTY });
        }
        if to == 0 {
            s.push(ORIGIN);
        }
        s
    }

    /// Glyph run covering every non-trivial site plus one cell of margin.
    ///
    /// ```
    /// use maya_painleve::maya::MayaDiagram;
    /// let m = MayaDiagram::xi(&[0, 3, 8]).unwrap();
    /// assert_eq!(m.render(), "■|□□□■■■■■□");
    /// ```
    pub fn render(&self) -> String {
        let (lo, hi) = self.window();
        self.render_range(lo.min(0) - 1, hi.max(0) + 1)
    }
}
