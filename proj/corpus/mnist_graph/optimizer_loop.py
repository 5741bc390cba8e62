import tensorflow as tf

w = tf.Variable(1.0)
loss = tf.square(w - 3.0)
opt = tf.train.AdamOptimizer(0.01)
sess = tf.Session()
for it in range(200):
    train_op = opt.minimize(loss)  # expect: RNC001
    sess.run(train_op)
