from layerline.field import is_prime

PRIME_POWERS_64 = [q for q in range(2, 65)
                   if any(q == p**m for p in range(2, q + 1) if is_prime(p) for m in range(1, 7))]
