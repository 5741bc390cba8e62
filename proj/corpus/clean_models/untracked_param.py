def prepare(ds, fn):
    ds = ds.map(fn)
    return ds.batch(8)
