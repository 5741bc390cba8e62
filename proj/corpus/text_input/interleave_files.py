import tensorflow as tf

files = tf.data.Dataset.list_files("/data/*.txt")
lines = files.interleave(tf.data.TextLineDataset, cycle_length=4)  # expect: DPM001
lines = lines.batch(128)
