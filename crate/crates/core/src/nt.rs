//! Number-theoretic helpers behind the constructive isometry matching:
//! integer factorization, square and norm tests, modular square roots,
//! two-square decompositions through Gaussian-integer gcds, and a complete
//! descent solver for the ternary equation `a·x² + b·y² + c·z² = 0` over the
//! rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

/// Integer square root test.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// Rational square root test (nonnegative input may still fail).
pub fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = exact_sqrt(q.numer())?;
    let d = exact_sqrt(q.denom())?;
    Some(BigRational::new(n, d))
}

/// Deterministic Miller-Rabin for the sizes this crate meets (the base set
/// is proven complete far beyond the 2^64-scale products that arise here).
pub fn is_prime(n: &BigInt) -> bool {
    if n <= &BigInt::one() {
        return false;
    }
    let small = [2i64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &small {
        let bp = big(p);
        if n == &bp {
            return true;
        }
        if (n % &bp).is_zero() {
            return false;
        }
    }
    let one = BigInt::one();
    let two = big(2);
    let n1 = n - &one;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'witness: for &a in &small {
        let mut x = big(a).modpow(&d, n);
        if x == one || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: &BigInt) -> BigInt {
    // Brent's cycle variant; n must be odd composite.
    let one = BigInt::one();
    let mut c = BigInt::one();
    loop {
        let mut x = big(2);
        let mut y = big(2);
        let mut d = BigInt::one();
        let f = |v: &BigInt, c: &BigInt| (v * v + c) % n;
        let mut count = 0u64;
        while d == one {
            x = f(&x, &c);
            y = f(&f(&y, &c), &c);
            let diff = if x > y { &x - &y } else { &y - &x };
            if diff.is_zero() {
                break;
            }
            d = diff.gcd(n);
            count += 1;
            if count > 1_000_000 {
                break;
            }
        }
        if d != one && &d != n {
            return d;
        }
        c += 1;
    }
}

/// Prime factorization of `|n|` (`n ≠ 0`), as sorted `(prime, exponent)`.
pub fn factorize(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.abs();
    assert!(!n.is_zero());
    let mut factors: Vec<BigInt> = Vec::new();
    for p in 2i64..=37 {
        let bp = big(p);
        while (&n % &bp).is_zero() {
            factors.push(bp.clone());
            n = &n / &bp;
        }
    }
    let mut p = big(41);
    while &(&p * &p) <= &n && p < big(100_000) {
        while (&n % &p).is_zero() {
            factors.push(p.clone());
            n = &n / &p;
        }
        p += 2;
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_prime(&m) {
            factors.push(m);
            continue;
        }
        let d = pollard_rho(&m);
        stack.push(&m / &d);
        stack.push(d);
    }
    factors.sort();
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    for f in factors {
        match out.last_mut() {
            Some((p, e)) if *p == f => *e += 1,
            _ => out.push((f, 1)),
        }
    }
    out
}

/// `n = sf · s²` with `sf` squarefree carrying the sign; returns `(sf, s)`.
pub fn squarefree_part(n: &BigInt) -> (BigInt, BigInt) {
    assert!(!n.is_zero());
    let mut sf = BigInt::one();
    let mut s = BigInt::one();
    for (p, e) in factorize(n) {
        if e % 2 == 1 {
            sf = sf * &p;
        }
        for _ in 0..(e / 2) {
            s = s * &p;
        }
    }
    if n.is_negative() {
        sf = -sf;
    }
    (sf, s)
}

/// Square root of `a` modulo an odd prime `p` (Tonelli-Shanks), if any.
pub fn sqrt_mod_prime(a: &BigInt, p: &BigInt) -> Option<BigInt> {
    let a = a.mod_floor(p);
    if a.is_zero() {
        return Some(BigInt::zero());
    }
    if p == &big(2) {
        return Some(a);
    }
    let one = BigInt::one();
    let two = big(2);
    let exp = (p - &one) / &two;
    if a.modpow(&exp, p) != one {
        return None;
    }
    // Factor p-1 = q·2^s.
    let p1 = p - &one;
    let s = p1.trailing_zeros().unwrap_or(0);
    let q = &p1 >> s;
    if s == 1 {
        // p ≡ 3 (mod 4)
        return Some(a.modpow(&((p + &one) / big(4)), p));
    }
    // Find a quadratic non-residue z.
    let mut z = two.clone();
    while z.modpow(&exp, p) == one {
        z += 1;
    }
    let mut m = s;
    let mut c = z.modpow(&q, p);
    let mut t = a.modpow(&q, p);
    let mut r = a.modpow(&((&q + &one) / &two), p);
    while !t.is_one() {
        let mut i = 0u64;
        let mut tt = t.clone();
        while !tt.is_one() {
            tt = tt.modpow(&two, p);
            i += 1;
            if i == m {
                return None;
            }
        }
        let b = c.modpow(&(BigInt::one() << (m - i - 1) as usize), p);
        m = i;
        c = b.modpow(&two, p);
        t = (&t * &c) % p;
        r = (&r * &b) % p;
    }
    Some(r)
}

/// Gaussian integer helpers on `(re, im)` pairs.
mod gauss {
    use super::*;

    pub fn norm(z: &(BigInt, BigInt)) -> BigInt {
        &z.0 * &z.0 + &z.1 * &z.1
    }

    pub fn mul(a: &(BigInt, BigInt), b: &(BigInt, BigInt)) -> (BigInt, BigInt) {
        (&a.0 * &b.0 - &a.1 * &b.1, &a.0 * &b.1 + &a.1 * &b.0)
    }

    fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
        // Nearest-integer division.
        let (q, r) = a.div_mod_floor(b);
        if &(&r * big(2)) > &b.abs() {
            q + 1
        } else {
            q
        }
    }

    pub fn divmod(a: &(BigInt, BigInt), b: &(BigInt, BigInt)) -> ((BigInt, BigInt), (BigInt, BigInt)) {
        let n = norm(b);
        let conj = (b.0.clone(), -b.1.clone());
        let prod = mul(a, &conj);
        let q = (round_div(&prod.0, &n), round_div(&prod.1, &n));
        let qb = mul(&q, b);
        let r = (&a.0 - &qb.0, &a.1 - &qb.1);
        (q, r)
    }

    pub fn gcd(a: &(BigInt, BigInt), b: &(BigInt, BigInt)) -> (BigInt, BigInt) {
        let mut a = a.clone();
        let mut b = b.clone();
        while !(b.0.is_zero() && b.1.is_zero()) {
            let (_, r) = divmod(&a, &b);
            a = b;
            b = r;
        }
        a
    }
}

/// Write `n ≥ 0` as `x² + y²`, if possible.
pub fn two_squares(n: &BigInt) -> Option<(BigInt, BigInt)> {
    if n.is_negative() {
        return None;
    }
    if n.is_zero() {
        return Some((BigInt::zero(), BigInt::zero()));
    }
    let mut z = (BigInt::one(), BigInt::zero());
    for (p, e) in factorize(n) {
        if p == big(2) {
            for _ in 0..e {
                z = gauss::mul(&z, &(BigInt::one(), BigInt::one()));
            }
        } else if (&p % big(4)) == big(3) {
            if e % 2 == 1 {
                return None;
            }
            let half = p.pow(e / 2);
            z = gauss::mul(&z, &(half, BigInt::zero()));
        } else {
            // p ≡ 1 (mod 4): split via gcd(p, t + i) with t² ≡ -1 (mod p).
            let t = sqrt_mod_prime(&(&p - 1), &p).expect("p ≡ 1 mod 4 has sqrt(-1)");
            let pi = gauss::gcd(&(p.clone(), BigInt::zero()), &(t, BigInt::one()));
            debug_assert_eq!(gauss::norm(&pi), p);
            for _ in 0..e {
                z = gauss::mul(&z, &pi);
            }
        }
    }
    debug_assert_eq!(gauss::norm(&z), *n);
    Some((z.0.abs(), z.1.abs()))
}

/// Is a positive rational a norm from the Gaussian rationals, and a witness
/// pair `(x, y)` with `x² + y² = q` when it is.
pub fn rational_two_squares(q: &BigRational) -> Option<(BigRational, BigRational)> {
    if q.is_negative() {
        return None;
    }
    if q.is_zero() {
        return Some((BigRational::zero(), BigRational::zero()));
    }
    // q = s/t: solve x'² + y'² = s·t and divide by t.
    let st = q.numer() * q.denom();
    let (x, y) = two_squares(&st)?;
    let t = BigRational::from_integer(q.denom().clone());
    Some((
        BigRational::from_integer(x) / t.clone(),
        BigRational::from_integer(y) / t,
    ))
}

/// Combined square root of `a` modulo squarefree `m > 0` by CRT over the
/// prime factors.
fn sqrt_mod_squarefree(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    if m.is_one() {
        return Some(BigInt::zero());
    }
    let mut t = BigInt::zero();
    let mut modulus = BigInt::one();
    for (p, e) in factorize(m) {
        debug_assert_eq!(e, 1, "modulus must be squarefree");
        let s = if p == big(2) {
            a.mod_floor(&big(2))
        } else {
            sqrt_mod_prime(a, &p)?
        };
        // CRT combine t mod modulus with s mod p.
        let g = modulus.extended_gcd(&p);
        debug_assert!(g.gcd.is_one());
        let diff = (&s - &t).mod_floor(&p);
        let step = (&g.x * &diff).mod_floor(&p);
        t = &t + &modulus * step;
        modulus = &modulus * &p;
        t = t.mod_floor(&modulus);
    }
    Some(t)
}

/// Solve `A·x² + B·y² = z²` for squarefree nonzero `A`, `B`; descent on `|A|`.
fn descend(a: &BigInt, b: &BigInt) -> Option<(BigInt, BigInt, BigInt)> {
    if a.abs() < b.abs() {
        let (y, x, z) = descend(b, a)?;
        return Some((x, y, z));
    }
    // Here |A| >= |B|.
    if a.is_one() {
        return Some((BigInt::one(), BigInt::zero(), BigInt::one()));
    }
    if b.is_one() {
        return Some((BigInt::zero(), BigInt::one(), BigInt::one()));
    }
    if a == &big(-1) || b == &big(-1) {
        // A x² = y² + z² (after moving the -1 term), with A squarefree > 0.
        let (pos, swap) = if b == &big(-1) { (a.clone(), false) } else { (b.clone(), true) };
        if pos.is_negative() {
            return None;
        }
        let (y, z) = two_squares(&pos)?;
        return Some(if swap {
            // -x² + B'.. : here A = -1, B = pos: -x² + B y² = z² with x² = B y² - z²
            (z, BigInt::one(), y)
        } else {
            (BigInt::one(), y, z)
        });
    }
    if a.is_negative() && b.is_negative() {
        return None;
    }
    // Find t with t² ≡ B (mod |A|), |t| ≤ |A|/2.
    let am = a.abs();
    let mut t = sqrt_mod_squarefree(&b.mod_floor(&am), &am)?;
    if &(&t * big(2)) > &am {
        t = &t - &am;
    }
    // t² - B = A·A'·d², with A' squarefree.
    let num = &(&t * &t) - b;
    if num.is_zero() {
        // B = t², squarefree means B = 1, already handled.
        unreachable!("square B slipped past the base case");
    }
    let quot = &num / a;
    debug_assert_eq!(&num % a, BigInt::zero());
    let (a1, d) = squarefree_part(&quot);
    let (x1, y1, z1) = descend(&a1, b)?;
    // Norm-form composition: from A·A'·d² = t² - B and A'·x1² = z1² - B·y1².
    let x = &a1 * &d * &x1;
    let y = &t * &y1 + &z1;
    let z = &t * &z1 + b * &y1;
    debug_assert!(!(x.is_zero() && y.is_zero() && z.is_zero()));
    debug_assert_eq!(a * &x * &x + b * &y * &y, &z * &z);
    Some((x, y, z))
}

/// Nontrivial integer solution of `a·x² + b·y² + c·z² = 0`, or `None` when
/// the form is anisotropic over the rationals. Complete (Legendre descent).
pub fn solve_ternary(a: &BigInt, b: &BigInt, c: &BigInt) -> Option<(BigInt, BigInt, BigInt)> {
    assert!(!a.is_zero() && !b.is_zero() && !c.is_zero());
    // Strip the overall gcd and square parts.
    let g = a.gcd(b).gcd(c);
    let (mut alpha, sa) = squarefree_part(&(a / &g));
    let (mut beta, sb) = squarefree_part(&(b / &g));
    let (mut gamma, sc) = squarefree_part(&(c / &g));
    // Scale factors carried back into the variables.
    let mut xs = sb.clone() * &sc;
    let mut ys = sa.clone() * &sc;
    let mut zs = sa.clone() * &sb;

    // Make the three coefficients pairwise coprime, preserving squarefree-ness.
    loop {
        let pairs: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];
        let mut changed = false;
        for (i, j) in pairs {
            let (ci, cj) = match (i, j) {
                (0, 1) => (alpha.clone(), beta.clone()),
                (0, 2) => (alpha.clone(), gamma.clone()),
                _ => (beta.clone(), gamma.clone()),
            };
            let g = ci.gcd(&cj);
            if g.is_one() {
                continue;
            }
            changed = true;
            // p := g divides exactly the two listed coefficients. Substitute
            // the third variable v -> g v', divide everything by g.
            match (i, j) {
                (0, 1) => {
                    alpha = &alpha / &g;
                    beta = &beta / &g;
                    gamma = &gamma * &g;
                    zs = zs * &g;
                    // re-extract squares from gamma
                    let (gf, gsq) = squarefree_part(&gamma);
                    gamma = gf;
                    xs = xs * &gsq;
                    ys = ys * &gsq;
                }
                (0, 2) => {
                    alpha = &alpha / &g;
                    gamma = &gamma / &g;
                    beta = &beta * &g;
                    ys = ys * &g;
                    let (bf, bsq) = squarefree_part(&beta);
                    beta = bf;
                    xs = xs * &bsq;
                    zs = zs * &bsq;
                }
                _ => {
                    beta = &beta / &g;
                    gamma = &gamma / &g;
                    alpha = &alpha * &g;
                    xs = xs * &g;
                    let (af, asq) = squarefree_part(&alpha);
                    alpha = af;
                    ys = ys * &asq;
                    zs = zs * &asq;
                }
            }
        }
        if !changed {
            break;
        }
    }

    let same_sign = alpha.is_positive() == beta.is_positive()
        && beta.is_positive() == gamma.is_positive();
    if same_sign {
        return None;
    }
    // α x² + β y² + γ z² = 0  ⟺  (-αγ) x² + (-βγ) y² = (γ z)².
    let aa = -(&alpha * &gamma);
    let bb = -(&beta * &gamma);
    let (x, y, z) = descend(&aa, &bb)?;
    let (fx, fy, fz) = (&gamma * &x, &gamma * &y, z);
    // Undo the variable scalings.
    let (mut rx, mut ry, mut rz) = (&fx * &xs, &fy * &ys, &fz * &zs);
    // Divide by the content for tidiness.
    let g = rx.gcd(&ry).gcd(&rz);
    if !g.is_zero() && !g.is_one() {
        rx = &rx / &g;
        ry = &ry / &g;
        rz = &rz / &g;
    }
    debug_assert_eq!(a * &rx * &rx + b * &ry * &ry + c * &rz * &rz, BigInt::zero());
    debug_assert!(!(rx.is_zero() && ry.is_zero() && rz.is_zero()));
    Some((rx, ry, rz))
}

/// Brute-force solvability check for small ternaries (test oracle).
#[doc(hidden)]
pub fn ternary_brute_force(a: i64, b: i64, c: i64, bound: i64) -> Option<(i64, i64, i64)> {
    for x in 0..=bound {
        for y in -bound..=bound {
            for z in -bound..=bound {
                if (x, y, z) == (0, 0, 0) {
                    continue;
                }
                if a * x * x + b * y * y + c * z * z == 0 {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small() {
        assert!(is_prime(&big(2)));
        assert!(is_prime(&big(97)));
        assert!(is_prime(&big(1_000_003)));
        assert!(!is_prime(&big(1)));
        assert!(!is_prime(&big(91)));
        assert!(!is_prime(&(big(1_000_003) * big(999_983))));
    }

    #[test]
    fn factorization_roundtrip() {
        let n = big(2 * 2 * 3 * 49 * 101);
        let f = factorize(&n);
        let mut back = BigInt::one();
        for (p, e) in &f {
            back *= p.pow(*e);
        }
        assert_eq!(back, n);
    }

    #[test]
    fn tonelli_finds_roots() {
        let p = big(1_000_003);
        for a in [2i64, 5, 10, 1234] {
            let sq = (big(a) * big(a)) % &p;
            let r = sqrt_mod_prime(&sq, &p).unwrap();
            assert_eq!((&r * &r).mod_floor(&p), sq);
        }
    }

    #[test]
    fn two_squares_examples() {
        assert_eq!(two_squares(&big(0)), Some((big(0), big(0))));
        let (x, y) = two_squares(&big(5)).unwrap();
        assert_eq!(&x * &x + &y * &y, big(5));
        let (x, y) = two_squares(&big(2 * 25 * 13)).unwrap();
        assert_eq!(&x * &x + &y * &y, big(650));
        assert!(two_squares(&big(7)).is_none());
        assert!(two_squares(&big(21)).is_none());
    }

    #[test]
    fn legendre_small_grid_matches_brute_force() {
        let vals: Vec<i64> = vec![-13, -10, -7, -5, -3, -2, -1, 1, 2, 3, 5, 6, 7, 10, 11];
        for &a in &vals {
            for &b in &vals {
                for &c in &vals {
                    let brute = ternary_brute_force(a, b, c, 12);
                    let ours = solve_ternary(&big(a), &big(b), &big(c));
                    if let Some((x, y, z)) = &ours {
                        assert_eq!(
                            big(a) * x * x + big(b) * y * y + big(c) * z * z,
                            BigInt::zero(),
                            "bad solution for ({a},{b},{c})"
                        );
                        assert!(!(x.is_zero() && y.is_zero() && z.is_zero()));
                    }
                    if brute.is_some() {
                        assert!(
                            ours.is_some(),
                            "missed solvable ternary ({a},{b},{c}): brute {brute:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn legendre_larger_instances() {
        for (a, b, c) in [(3, 5, -2), (1, 1, -2), (2, 3, -5), (7, 11, -3), (13, 17, -21)] {
            if let Some((x, y, z)) = solve_ternary(&big(a), &big(b), &big(c)) {
                assert_eq!(big(a) * &x * &x + big(b) * &y * &y + big(c) * &z * &z, BigInt::zero());
            }
        }
        // A known anisotropic one: x² + y² = 3 z² has no rational points.
        assert!(solve_ternary(&big(1), &big(1), &big(-3)).is_none());
    }

    #[test]
    fn rational_two_square_witness() {
        let q = BigRational::new(big(5), big(9));
        let (x, y) = rational_two_squares(&q).unwrap();
        assert_eq!(&x * &x + &y * &y, q);
        assert!(rational_two_squares(&BigRational::new(big(7), big(1))).is_none());
        // 7/7 = 1 is a norm even though 7 alone is not.
        assert!(rational_two_squares(&BigRational::new(big(7), big(7))).is_some());
    }
}
