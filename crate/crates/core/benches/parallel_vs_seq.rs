use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use shiftlab::complex::Complex;
use shiftlab::ekr::{cross_scan_range_seq, CrossScan};
use shiftlab::face::Face;
use shiftlab::linalg::random_invertible;
use shiftlab::shifting::row_of_minors_seq;
use shiftlab::DEFAULT_PRIME;

fn simplex(n: usize) -> Complex {
    Complex::from_facets(vec![Face::from_members(0..n)], n).unwrap()
}

fn classic_scan_input(n: usize, r: usize) -> (CrossScan, u32) {
    let dx = simplex(n);
    let mut faces: Vec<Face> = dx.faces(r).to_vec();
    faces.sort_by_key(|f| f.bits());
    let m = faces.len();
    assert!(m <= 24);
    let meet: Vec<u128> = faces
        .iter()
        .map(|b| {
            let mut mask = 0u128;
            for (j, a) in faces.iter().enumerate() {
                if a.intersects(*b) {
                    mask |= 1 << j;
                }
            }
            mask
        })
        .collect();
    (
        CrossScan {
            meet,
            shadow: None,
            full_a: (1u128 << m) - 1,
        },
        1u32 << m,
    )
}

fn bench_cross_scan(c: &mut Criterion) {
    let (scan, total) = classic_scan_input(7, 2);
    let mut group = c.benchmark_group("cross_scan_2^21");
    group.bench_function("seq", |b| {
        b.iter(|| black_box(cross_scan_range_seq(&scan, 1, total)))
    });
    #[cfg(feature = "parallel")]
    group.bench_function("par", |b| {
        b.iter(|| black_box(shiftlab::ekr::cross_scan_range_par(&scan, 1, total)))
    });
    group.finish();
}

fn bench_minor_rows(c: &mut Criterion) {
    let n = 10;
    let basis = random_invertible(n, 1, DEFAULT_PRIME);
    let members: Vec<Face> = Face::from_members(0..n).k_subsets(4);
    let t = Face::from_members([0, 1, 2, 3]);
    let mut group = c.benchmark_group("shift_row_210_minors");
    group.bench_function("seq", |b| {
        b.iter(|| black_box(row_of_minors_seq(&basis, &members, t)))
    });
    #[cfg(feature = "parallel")]
    group.bench_function("par", |b| {
        b.iter(|| black_box(shiftlab::shifting::row_of_minors_par(&basis, &members, t)))
    });
    group.finish();
}

fn bench_alg_shift_complex(c: &mut Criterion) {
    let dx = shiftlab::generators::gen_random_complex(8, 3, 0.6, 7, false).unwrap();
    c.bench_function("alg_shift_complex_n8", |b| {
        b.iter(|| {
            black_box(shiftlab::shifting::alg_shift_complex_seeded(&dx, 1, DEFAULT_PRIME).unwrap())
        })
    });
}

criterion_group!(
    benches,
    bench_cross_scan,
    bench_minor_rows,
    bench_alg_shift_complex
);
criterion_main!(benches);
