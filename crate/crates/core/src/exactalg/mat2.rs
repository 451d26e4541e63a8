use super::ring::Ring;

/// 2x2 matrix over a commutative ring, row-major.
#[derive(Clone, PartialEq, Debug)]
pub struct Mat2<R> {
    pub a: [[R; 2]; 2],
}

impl<R: Ring> Mat2<R> {
    pub fn new(a11: R, a12: R, a21: R, a22: R) -> Self {
        Mat2 { a: [[a11, a12], [a21, a22]] }
    }

    pub fn identity() -> Self {
        Self::new(R::one(), R::zero(), R::zero(), R::one())
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.a[i - 1][j - 1]
    }

    pub fn mul(&self, o: &Self) -> Self {
        let e = |i: usize, j: usize| {
            let mut s = self.a[i][0].mul_ref(&o.a[0][j]);
            s.fma_ref(&self.a[i][1], &o.a[1][j]);
            s
        };
        Self::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn sub(&self, o: &Self) -> Self {
        let e = |i: usize, j: usize| self.a[i][j].sub_ref(&o.a[i][j]);
        Self::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn scale(&self, s: &R) -> Self {
        let e = |i: usize, j: usize| self.a[i][j].mul_ref(s);
        Self::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Mat2<S> {
        Mat2::new(f(&self.a[0][0]), f(&self.a[0][1]), f(&self.a[1][0]), f(&self.a[1][1]))
    }

    pub fn trace(&self) -> R {
        self.a[0][0].add_ref(&self.a[1][1])
    }

    pub fn det(&self) -> R {
        self.a[0][0].mul_ref(&self.a[1][1]).sub_ref(&self.a[0][1].mul_ref(&self.a[1][0]))
    }

    /// Inverse of a determinant-one matrix.
    pub fn adjugate(&self) -> Self {
        Self::new(
            self.a[1][1].clone(),
            -self.a[0][1].clone(),
            -self.a[1][0].clone(),
            self.a[0][0].clone(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().flatten().all(|x| x.is_zero())
    }
}
