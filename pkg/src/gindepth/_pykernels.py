"""Pure-Python reference kernels.

Monomials inside the reducers are *rkeys*: ``(-deg, e_n, ..., e_1)``.
Ascending tuple order on rkeys is descending grevlex order, monomial
multiplication is componentwise addition, and divisibility compares the
entries after the first. ``_ckernels`` implements the same interface.
"""

from heapq import heapify, heappop, heappush


def minimalize(exps):
    """Minimal elements of a set of exponent vectors under divisibility."""
    kept = []
    for e in sorted(set(exps), key=sum):
        for k in kept:
            for a, b in zip(k, e):
                if a > b:
                    break
            else:
                break
        else:
            kept.append(e)
    return kept


class ModpReducer:
    """A monic basis over F_p with a full-reduction normal form."""

    def __init__(self, p):
        self.p = p
        self.leads = []
        self.tails = []

    def __len__(self):
        return len(self.leads)

    @property
    def leads_list(self):
        return list(self.leads)

    def add(self, lead, tail):
        """Append a monic element: ``lead`` rkey and ``tail`` as [(rkey, coeff)]."""
        self.leads.append(lead)
        self.tails.append(list(tail))

    def find_divisor(self, m):
        for j, lead in enumerate(self.leads):
            for i in range(1, len(m)):
                if lead[i] > m[i]:
                    break
            else:
                return j
        return -1

    def normal_form(self, f):
        """Fully reduce ``f`` (dict rkey -> coeff); returns a new dict."""
        p = self.p
        f = dict(f)
        heap = list(f)
        heapify(heap)
        rem = {}
        leads, tails = self.leads, self.tails
        while heap:
            m = heappop(heap)
            c = f.pop(m, 0)
            if not c:
                continue
            j = self.find_divisor(m)
            if j < 0:
                rem[m] = c
                continue
            q = [a - b for a, b in zip(m, leads[j])]
            for e, gc in tails[j]:
                mm = tuple([a + b for a, b in zip(e, q)])
                old = f.get(mm)
                if old is None:
                    f[mm] = (-c * gc) % p
                    heappush(heap, mm)
                else:
                    v = (old - c * gc) % p
                    if v:
                        f[mm] = v
                    else:
                        del f[mm]
        return rem


class FieldReducer(ModpReducer):
    """Same algorithm over an arbitrary exact field object (used for Q)."""

    def __init__(self, field):
        super().__init__(0)
        self.field = field

    def normal_form(self, f):
        F = self.field
        f = dict(f)
        heap = list(f)
        heapify(heap)
        rem = {}
        leads, tails = self.leads, self.tails
        while heap:
            m = heappop(heap)
            c = f.pop(m, 0)
            if not c:
                continue
            j = self.find_divisor(m)
            if j < 0:
                rem[m] = c
                continue
            q = [a - b for a, b in zip(m, leads[j])]
            for e, gc in tails[j]:
                mm = tuple([a + b for a, b in zip(e, q)])
                old = f.get(mm)
                if old is None:
                    f[mm] = F.neg(F.mul(c, gc))
                    heappush(heap, mm)
                else:
                    v = F.sub(old, F.mul(c, gc))
                    if v:
                        f[mm] = v
                    else:
                        del f[mm]
        return rem
